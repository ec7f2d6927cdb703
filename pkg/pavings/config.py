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
import os

import yaml

from pavings.log import LOGLEVELS

LOGGER = logging.getLogger(__name__)


def _int_setting(name, default, minimum=0):
    value = os.getenv(name, default)
    try:
        value = int(value)
    except (TypeError, ValueError):
        msg = f'{name} must be an integer, got {value!r}'
        LOGGER.error(msg)
        raise EnvironmentError(msg)

    if value < minimum:
        msg = f'{name} must be at least {minimum}, got {value}'
        LOGGER.error(msg)
        raise EnvironmentError(msg)

    return value


PAVINGS_LOGGING_LOGLEVEL = os.getenv('PAVINGS_LOGGING_LOGLEVEL', 'ERROR')
PAVINGS_LOGGING_LOGFILE = os.getenv('PAVINGS_LOGGING_LOGFILE')

PAVINGS_DATA_DIR = os.getenv('PAVINGS_DATA_DIR')
PAVINGS_ERROR_CONFIG = os.getenv('PAVINGS_ERROR_CONFIG')
PAVINGS_EXTRA_CONFIG = os.getenv('PAVINGS_EXTRA_CONFIG')

PAVINGS_WORKERS = _int_setting('PAVINGS_WORKERS', 1, minimum=1)
PAVINGS_ENUMERATION_LIMIT = _int_setting('PAVINGS_ENUMERATION_LIMIT', 10)
PAVINGS_SERIES_ORDER = _int_setting('PAVINGS_SERIES_ORDER', 40)

if PAVINGS_LOGGING_LOGLEVEL not in LOGLEVELS:
    msg = f'PAVINGS_LOGGING_LOGLEVEL must be one of {list(LOGLEVELS)}'
    LOGGER.error(msg)
    raise EnvironmentError(msg)

if PAVINGS_DATA_DIR is None:
    # running from a source checkout
    PAVINGS_DATA_DIR = os.path.join(
        os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'data')
    LOGGER.debug(f'PAVINGS_DATA_DIR not set. Defaulting to {PAVINGS_DATA_DIR}')

if PAVINGS_ERROR_CONFIG is None:
    PAVINGS_ERROR_CONFIG = os.path.join(PAVINGS_DATA_DIR, 'errors.csv')

if PAVINGS_EXTRA_CONFIG is None:
    PAVINGS_EXTRA_CONFIG = os.path.join(PAVINGS_DATA_DIR, 'extra-options.yml')

PAVINGS_SCHEMA_DIR = os.path.join(PAVINGS_DATA_DIR, 'schemas')
PAVINGS_FIXTURE_DIR = os.path.join(PAVINGS_DATA_DIR, 'fixtures')
PAVINGS_OEIS_DIR = os.path.join(PAVINGS_DATA_DIR, 'oeis')

try:
    with open(PAVINGS_EXTRA_CONFIG) as extra_config_file:
        EXTRAS = yaml.safe_load(extra_config_file)
except Exception as err:
    msg = f'Failed to read extra configurations file: {err}'
    LOGGER.error(msg)
    raise EnvironmentError(msg)
