# =================================================================
#
# Copyright (c) 2026 The pavings authors
#
# Permission is hereby granted, free of charge, to any person
# obtaining a copy of this software and associated documentation
# files (the "Software"), to deal in the Software without
# restriction, including without limitation the rights to use,
# copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following
# conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
#
# =================================================================

import logging
import sys

LOGGER = logging.getLogger(__name__)

LOG_FORMAT = '[%(asctime)s] %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%dT%H:%M:%SZ'

LOGLEVELS = {
    'CRITICAL': logging.CRITICAL,
    'ERROR': logging.ERROR,
    'WARNING': logging.WARNING,
    'INFO': logging.INFO,
    'DEBUG': logging.DEBUG,
    'NOTSET': logging.NOTSET,
}


def setup_logger(loglevel, logfile=None):
    """
    Setup package logging configuration. Output goes to the error stream,
    a file, or (with `stdout`) the output stream; without a logfile
    records are discarded, since the commands echo their own errors.

    Repeated calls replace the handler installed by the previous call, so
    worker processes and tests can reconfigure freely.

    :param loglevel: logging level name
    :param logfile: logfile location, `stdout` or `stderr`
    :returns: `logging.Logger` of the package
    """

    logger = logging.getLogger('pavings')
    logger.setLevel(LOGLEVELS[loglevel])

    for handler in list(logger.handlers):
        if getattr(handler, '_pavings', False):
            logger.removeHandler(handler)
            handler.close()

    if logfile is None:
        handler = logging.NullHandler()
    else:
        if logfile == 'stdout':
            handler = logging.StreamHandler(sys.stdout)
        elif logfile == 'stderr':
            handler = logging.StreamHandler(sys.stderr)
        else:
            handler = logging.FileHandler(logfile)

        handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))

    handler._pavings = True
    logger.addHandler(handler)

    LOGGER.debug('Logging initialized')
    return logger
