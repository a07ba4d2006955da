import cyclolib.main as cyclo

"""Command line entry point - see cyclolib/io_cyclo.py for the arguments"""

cyclo.main()
