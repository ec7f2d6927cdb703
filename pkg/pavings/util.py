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

from fractions import Fraction
import io
import json
import logging
import os

import jsonschema

from pavings import config

LOGGER = logging.getLogger(__name__)


class InputError(ValueError):
    """custom exception handler"""

    def __init__(self, message, code=210, **kwargs):
        super(InputError, self).__init__(message)
        self.code = code
        self.kwargs = kwargs


def read_file(filename, encoding='utf-8'):
    """
    read file contents

    :param filename: filename
    :param encoding: encoding (default=utf-8)
    :returns: buffer of file contents
    """

    LOGGER.debug(f'Reading file {filename} (encoding {encoding})')

    with io.open(filename, encoding=encoding) as fh:
        return fh.read().strip()


def str2bool(value):
    """
    helper function to return Python boolean
    type (source: https://stackoverflow.com/a/715468)

    :param value: value to be evaluated
    :returns: `bool` of whether the value is boolean-ish
    """

    if isinstance(value, bool):
        return value
    if value is None:
        return False

    return str(value).lower() in ('yes', 'true', 't', '1', 'on')


def fraction2str(value):
    """
    Exact decimal string of a rational: '7' for integers, 'p/q' otherwise

    :param value: `int` or `fractions.Fraction`
    :returns: `str`
    """

    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def is_integral(value):
    """
    :param value: `int` or `fractions.Fraction`
    :returns: `bool` of whether the value is an integer
    """

    return Fraction(value).denominator == 1


def json_serial(obj):
    """
    helper function to convert to JSON non-default
    types (source: https://stackoverflow.com/a/22238613)

    :param obj: `object` to be evaluate
    :returns: JSON non-default type to `str` or `list`
    """

    if isinstance(obj, Fraction):
        return fraction2str(obj)

    images = getattr(obj, 'images', None)
    if isinstance(images, tuple):
        return [i + 1 for i in images]

    msg = f'{obj} type {type(obj)} not serializable'
    LOGGER.error(msg)
    raise TypeError(msg)


def schema_path(name):
    """
    :param name: schema name (e.g. `paving`)
    :returns: path to the JSON schema in the data directory
    """

    return os.path.join(config.PAVINGS_SCHEMA_DIR, f'{name}.json')


def load_json(filepath, schema=None):
    """
    Read a JSON document, optionally validating it against a schema
    from the data directory

    :param filepath: path to JSON file
    :param schema: schema name, or None to skip validation
    :returns: `dict` of the document
    """

    try:
        document = json.loads(read_file(filepath))
    except (OSError, ValueError) as err:
        msg = f'Cannot read {filepath}: {err}'
        LOGGER.error(msg)
        raise InputError(msg, error=msg)

    if schema is not None:
        with open(schema_path(schema)) as fh:
            schema_doc = json.load(fh)
        try:
            jsonschema.validate(document, schema_doc)
        except jsonschema.ValidationError as err:
            msg = f'{filepath} fails the {schema} schema: {err.message}'
            LOGGER.error(msg)
            raise InputError(msg, error=msg)

    return document


def write_json(obj, filepath=None):
    """
    Serialize to JSON, exact values as strings

    :param obj: object to serialize
    :param filepath: output file, or None to only return the text
    :returns: `str` of JSON
    """

    text = json.dumps(obj, indent=4, default=json_serial)

    if filepath is not None:
        LOGGER.debug(f'Writing {filepath}')
        with open(filepath, 'w') as fh:
            fh.write(text + '\n')

    return text


def read_bfile(filepath):
    """
    Read an OEIS b-file: lines "n a(n)", '#' comments and blank
    lines ignored

    :param filepath: path to b-file
    :returns: `list` of (n, a(n)) integer pairs in file order
    """

    pairs = []

    for lineno, line in enumerate(read_file(filepath).splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue

        tokens = line.split()
        try:
            if len(tokens) != 2:
                raise ValueError(line)
            pairs.append((int(tokens[0]), int(tokens[1])))
        except ValueError:
            msg = f'Malformed b-file line {lineno} in {filepath}: {line}'
            LOGGER.error(msg)
            raise InputError(msg, code=211, line=lineno, text=line)

    return pairs


def format_bfile(pairs):
    """
    :param pairs: iterable of (n, a(n)) integer pairs
    :returns: `str` of b-file lines
    """

    return '\n'.join(f'{n} {value}' for n, value in pairs)


def data_path(*parts):
    """
    :param parts: path components below the data directory
    :returns: full path
    """

    return os.path.join(config.PAVINGS_DATA_DIR, *parts)
