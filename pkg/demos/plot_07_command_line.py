"""
Command line
============

Every computation is also available from the ``hyperpack`` command. Here
the entry point is called in-process.
"""

from hyperpack.cli import main

main(["density", "--u", "7", "--v", "3", "--w", "7"])
main(["density", "--u", "5", "--v", "4", "--w", "5", "--mode", "noncongruent-opt", "--format", "json"])
main(["table", "1", "--format", "csv", "--threads", "1"])
main(["plot-data", "--kind", "density-vs-x", "--u", "5", "--v", "4", "--w", "5", "--samples", "5"])

# Errors are reported as JSON on stderr with a nonzero exit code.
print("exit code:", main(["density", "--u", "3", "--v", "3", "--w", "3"]))
