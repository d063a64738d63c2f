import datetime
import logging
import logging.handlers
import os

from mlat.config import (
    DEFAULT_LOG_FILENAME,
    DEFAULT_LOG_LEVEL,
    DEFAULT_LOG_OVERWRITE_OPT
)


DEFAULT_FORMAT = (
    "%(asctime)s - %(name)s"
    " - Thread: %(threadName)s - %(levelname)s - %(message)s"
)
DEFAULT_FORMATTER = logging.Formatter(DEFAULT_FORMAT)
CONSOLE_LOG_LEVEL = logging.WARNING


def setup_logger(
    log_dir,
    overwrite_log=DEFAULT_LOG_OVERWRITE_OPT,
    log_level=DEFAULT_LOG_LEVEL,
):
    """
    Configure and create the logger

    :param log_dir: the path to the log directory
    :param overwrite_log: a boolean specifying whether to create new log files
    or overwrite a default log file 'mlat.log'
    :param log_level: a string specifying what level of log messages to record
    in the log file. Values are not case sensitive. The list of acceptable
    values are the names of Python's standard lib logging levels.
    (critical, error, warning, info, debug, notset)
    :returns: path to the log file
    """
    # Default file name
    filename = DEFAULT_LOG_FILENAME

    # Create a new log file named with a timestamp
    if not overwrite_log:
        filename = "mlat-{}.log".format(timestamp())

    os.makedirs(log_dir, exist_ok=True)
    log_filepath = os.path.abspath(os.path.join(log_dir, filename))

    root = logging.getLogger()
    root.setLevel(log_level)

    # Repeated CLI invocations in one process must not stack handlers
    for handler in list(root.handlers):
        if getattr(handler, '_mlat_handler', False):
            root.removeHandler(handler)
            handler.close()

    # Setup rotating file handler
    fileHandler = logging.handlers.RotatingFileHandler(log_filepath, mode="w")
    fileHandler.setFormatter(DEFAULT_FORMATTER)
    fileHandler._mlat_handler = True

    # Setup console handler, stderr only so reports on stdout stay clean
    consoleHandler = logging.StreamHandler()
    consoleHandler.setFormatter(DEFAULT_FORMATTER)
    consoleHandler.setLevel(CONSOLE_LOG_LEVEL)
    consoleHandler._mlat_handler = True

    root.addHandler(fileHandler)
    root.addHandler(consoleHandler)

    return log_filepath


def timestamp():
    """
    Local time with its UTC offset, ISO 8601. Names timestamped log files.
    """
    return datetime.datetime.now().astimezone().isoformat()


def seconds_to_hms(t):
    """
    Elapsed time of a catalog run as hh:mm:ss

    :type t: int or float
    """
    minutes, seconds = divmod(int(t), 60)
    hours, minutes = divmod(minutes, 60)
    return f'{hours:02d}:{minutes:02d}:{seconds:02d}'


def mask_of(elements):
    """
    Membership bitset of an iterable of element indices
    """
    mask = 0
    for x in elements:
        mask |= 1 << int(x)
    return mask


def members(mask):
    """
    Sorted element indices of a membership bitset
    """
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def is_submask(a, b):
    return a & ~b == 0


def popcount(mask):
    return bin(mask).count('1')
