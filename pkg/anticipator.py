#!venv/Scripts/python
#-*- coding: utf-8 -*-

"""
anticipator.py
___________________________________________________________________________________________________
This file is not a module and is intended to be run as a script.
It runs the command line of the receivables anticipation pool simulator:
price, simulate, optimize and validate.
___________________________________________________________________________________________________
(c) Lafiteau Franck 2026
"""

# import built-in modules
import sys

# import pool_libs
from pool_libs import logger, LoggerInterrupt
from pool_libs.cli import main


if __name__ == "__main__":
    logger.info("======= Start Anticipator =======")
    try:
        code = main()
    except LoggerInterrupt:
        logger.traceback(sys.exc_info()[2])
        code = 1
    logger.info("======= Anticipator Closed =======")
    logger.save()
    sys.exit(code)
