#!/usr/bin/env python3

import json
import os
import sys
import time
from collections import OrderedDict
from pathlib import Path

from fields import InputError, rationals, prime_field

#------------------------------------------------------------------------------#
#    constants
#------------------------------------------------------------------------------#

CONFIG_KEYS = ("field", "p", "lambda", "seed", "height", "trials")

DEFAULTS = OrderedDict([("field", "Q"), ("p", 5), ("lambda", 1), ("seed", 0),
                        ("height", 100), ("trials", 20)])

SEED_VARIABLE = "RLK_SEED"

# exit codes
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATED = 2
EXIT_FINDING = 3

#------------------------------------------------------------------------------#
#    configuration
#------------------------------------------------------------------------------#

def load_config(configfilename="config.json"):
    """values present in the configuration file; a bad file counts as empty"""
    config_path = Path(configfilename)
    if not config_path.exists():
        return {}
    try:
        with config_path.open() as config_file:
            config = json.load(config_file)
        if not isinstance(config, dict):
            raise ValueError("not a JSON object")
    except ValueError:
        print("Error in reading the configuration file {}; "
              "it is ignored.".format(config_path), flush=True)
        return {}
    return {k: v for k, v in config.items() if k in CONFIG_KEYS}


def load_config_for_command_line_help(configfilename="config.json"):

    config = load_config(configfilename)
    if config:
        configtext = "The configuration file {} is present: ".format(
            configfilename) + " ".join("[{}: {}]".format(k, config[k])
                                       for k in CONFIG_KEYS if k in config)
    else:
        configtext = "No valid configuration file located."
    return config, configtext


def effective_settings(flags, config, environ=None):
    """RLK_SEED (seed only) > flag > configuration file > defaults"""
    if environ is None:
        environ = os.environ
    settings = OrderedDict(DEFAULTS)
    settings.update(config)
    for key in CONFIG_KEYS:
        if flags.get(key) is not None:
            settings[key] = flags[key]
    if environ.get(SEED_VARIABLE):
        try:
            settings["seed"] = int(environ[SEED_VARIABLE])
        except ValueError:
            raise InputError("{} must be an integer, got {!r}"
                             .format(SEED_VARIABLE, environ[SEED_VARIABLE]))
    return settings


def write_config(settings, configfilename="config.json"):
    config_path = Path(configfilename)
    with config_path.open("w") as config_file:
        json.dump({k: settings[k] for k in CONFIG_KEYS}, config_file, indent=4)
    return config_path


def field_from_settings(settings):
    if settings["field"] == "Q":
        return rationals()
    if settings["field"] == "Fp":
        return prime_field(int(settings["p"]))
    raise InputError("field must be Q or Fp, got {!r}".format(settings["field"]))

#------------------------------------------------------------------------------#
#    files
#------------------------------------------------------------------------------#

def read_json(filename):
    path = Path(filename)
    if not path.exists():
        raise InputError("file {} does not exist".format(path))
    try:
        with path.open() as infile:
            return json.load(infile)
    except ValueError as error:
        raise InputError("{} is not valid JSON: {}".format(path, error))


def json_pdump(obj, outfile, ensure_ascii=False, indent=4,
               separators=(',', ': ')):
    "json pretty dump"
    json.dump(obj, outfile, ensure_ascii=ensure_ascii, indent=indent,
              separators=separators)
    print(file=outfile)


def write_report(obj, outfilename=None):
    """to the named file, or stdout"""
    if outfilename is None:
        json_pdump(obj, sys.stdout)
        return None
    path = Path(outfilename)
    with path.open("w") as outfile:
        json_pdump(obj, outfile)
    return path

#------------------------------------------------------------------------------#
#    stdout and the run log
#------------------------------------------------------------------------------#

def stdout_list(header, *args):
    print(header, flush=True)
    for x in args:
        print(x, flush=True)


def append_log(logfilename, command, code, elapsed):
    localtime = time.asctime(time.localtime(time.time()))
    with Path(logfilename).open("a") as logfile:
        print("{:30} {:12} exit: {} seconds: {:.2f}".format(
            localtime, command, code, elapsed), file=logfile)
