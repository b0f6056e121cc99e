#-*- coding: utf-8 -*-

"""
RECEIVABLES POOL pool_libs
____________________________________________________________________________________________________
logger lib
version : 1.1
____________________________________________________________________________________________________
This Lib contains all logging system of the simulator
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from typing import Optional, TextIO
from os.path import join, getmtime, exists
from os import listdir, makedirs, remove
from multiprocessing import current_process
from threading import current_thread
from time import ctime, localtime
import traceback
import sys

# Import config
from . import config


# Create object
class LoggerInterrupt(Exception):
    """
    interruption of program from logger
    """


class Logger:
    """
    Logger object

    This object represent the logger of the simulator.
    Only the main process owns Latest.log, batch workers echo to stderr.

    attributs:
        - log_folder: str = Directory of logs
        - logs: list[dict[str, str]] = list of all logs
        - instant_log: bool = echo every log on stderr
    """
    def __init__(self, folder: str=config.LOG_FOLDER, instant_log: bool=True) -> None:
        self.log_folder: str = folder
        self.logs: list[dict[str, str]] = []
        self.instant_log: bool = instant_log
        self.log_file: Optional[TextIO] = None

        if not config.LOG or current_process().name != "MainProcess":
            return
        self._archive_latest()
        self.log_file = open(join(self.log_folder, "Latest.log"), "w+", encoding="utf-8")

        # log that the logger is initialized
        self.debug("Logger initialized")

    def _archive_latest(self) -> None:
        """
        Move the previous Latest.log into a dated folder
        """
        folder = self.log_folder
        makedirs(folder, exist_ok=True)
        latest = join(folder, "Latest.log")
        if not exists(latest):
            return
        log_date = localtime(getmtime(latest))
        date_folder = join(folder, f"{log_date[0]}-{log_date[1]}-{log_date[2]}")
        makedirs(date_folder, exist_ok=True)
        duplicates = len(listdir(date_folder))+1
        with open(latest, "r", encoding="utf-8") as source:
            with open(join(date_folder, f"{duplicates}.log"), "w", encoding="utf-8") as logfile:
                logfile.write(source.read())
        remove(latest)

    def _record(self, level: str, message: str) -> dict[str, str]:
        """
        Store, echo and write one log record
        """
        log = {
            "level": level,
            "time": ctime(),
            "thread": f"{current_process().name}/{current_thread().name}",
            "message": message
        }
        self.logs.append(log)
        if self.instant_log:
            print(self.get_strflog(log), file=sys.stderr)
        # forked workers inherit the handle but must not write to it
        if self.log_file is not None and current_process().name == "MainProcess":
            self.log_file.write(self.get_strflog(log)+"\n")
            self.log_file.flush()
        return log

    # create logging methods
    def debug(self, message: str) -> Optional[dict[str, str]]:
        """
        this methods logs a debug message and return the corresponding log
        """
        if config.LOG_DEBUG and config.LOG:
            return self._record("Debug", message)
        return None

    def info(self, message: str) -> Optional[dict[str, str]]:
        """
        this methods logs a info message and return the corresponding log
        """
        if not config.LOG:
            return None
        return self._record("Info", message)

    def warning(self, message: str) -> Optional[dict[str, str]]:
        """
        this methods logs a warning message and return the corresponding log
        """
        if not config.LOG:
            return None
        return self._record("Warning", message)

    def error(self, message: str) -> Optional[dict[str, str]]:
        """
        this methods logs a error message and return the corresponding log
        """
        if not config.LOG:
            return None
        return self._record("Error", message)

    def fatal(self, message: str) -> None:
        """
        this methods logs a fatal error message then interrupt the program
        """
        if config.LOG:
            self._record("Fatal", message)
        raise LoggerInterrupt(message)

    def get_logs(self, level: str) -> list[dict[str, str]]:
        """
        get all logs of level specified
        """
        return [log for log in self.logs if log["level"] == level]

    # create data access methods
    def get_strflog(self, log: dict[str, str]|None) -> str:
        """
        get the string format of a log
        """
        if log:
            return f"[ {log['level']:^7} ][ {log['thread']} ][ {log['time']} ]: {log['message']}"
        return ""

    def get_last(self, level: str) -> dict[str, str] | None:
        """
        Return last log of level specified
        """
        for log in self.logs[::-1]:
            if log["level"] == level:
                return log
        return None

    def save(self) -> None:
        """
        Close Latest.log
        """
        if self.log_file is not None:
            self.log_file.close()
            self.log_file = None

    def traceback(self, tb) -> None:
        """
        Print the Traceback from logger errors and fatals
        """
        errors = self.get_logs("Error")
        stacklines = traceback.format_tb(tb)[:-1]
        if stacklines:
            stacklines[-1] = stacklines[-1].split("\n")[0]+"\n"
        print("Traceback (most recent call last):\n"+
              "".join(stacklines)+
              self.get_strflog(self.get_last("Fatal")), file=sys.stderr, end="")
        if errors:
            print("\n\nDuring process several errors occurs:\n"+"\n".join(
                self.get_strflog(error) for error in errors
            ), file=sys.stderr, end="")
