#------------------------------------------------------------------------------#
#
#    booktabs tables for verification summaries
#
#------------------------------------------------------------------------------#

LATEX_SPECIALS = {"_": "\\_", "&": "\\&", "%": "\\%", "#": "\\#"}


def escape(item):
    return "".join(LATEX_SPECIALS.get(ch, ch) for ch in item)


def findLongestString(table):
    return max((len(item) for line in table for item in line), default=0)


def findLongestLine(table):
    return max((len(line) for line in table), default=0)


def MakeLatexTable(datalines, outfile):
    """datalines are whitespace-separated rows; the first is the header"""

    table = [[escape(item) for item in line.split()] for line in datalines]
    table = [line for line in table if line]
    columnwidth = findLongestString(table)
    numberofcolumns = findLongestLine(table)

    print("\\documentclass{article}", file=outfile)
    print("\\usepackage{booktabs}", file=outfile)
    print("\\begin{document}", file=outfile)
    print("\\begin{tabular}{" + "l" * numberofcolumns + "}", file=outfile)
    print("\\toprule", file=outfile)
    for i, line in enumerate(table):
        cells = [item.rjust(columnwidth) for item in line]
        cells += [" " * columnwidth] * (numberofcolumns - len(line))
        print(" & ".join(cells) + " \\\\", file=outfile)
        if i == 0:
            print("\\midrule", file=outfile)
    print("\\bottomrule", file=outfile)
    print("\\end{tabular}", file=outfile)
    print("\\end{document}", file=outfile)
