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

from collections import OrderedDict
import csv
import io
import json
import logging
import os

from mpmath import mp, mpf

from pavings import config
from pavings.util import format_bfile, fraction2str, is_integral


LOGGER = logging.getLogger(__name__)

OUTPUT_FORMATS = ['table', 'json', 'csv', 'bfile']


class OutputFormatError(ValueError):
    """custom exception handler"""

    def __init__(self, message, code=405, **kwargs):
        super(OutputFormatError, self).__init__(message)
        self.code = code
        self.kwargs = kwargs


class Report:
    """
    Superclass for reports generated during a verification run, one
    check at a time.

    A report accepts a passing or failing check once it has run, adds it
    onto the existing report file (if one exists) and writes it all out
    to disk immediately, so partial results survive a long run.

    This is meant to be an abstract superclass and should not be
    instantiated on its own.
    """

    def __init__(self, root):
        """
        Initialize a new Report that writes to the directory <root>.

        :param root: Path to the run's working directory, or None.
        """

        self._working_directory = root

    def _load_check_result_pass(self, check, *args):
        """
        Stores what the report needs about a check that passed.

        :param check: Name of the check.
        :param args: Additional information about the check.
        :returns: void
        """

        raise NotImplementedError()

    def _load_check_result_fail(self, check, *args):
        """
        Stores what the report needs about a check that failed.

        :param check: Name of the check.
        :param args: Additional information about the check.
        :returns: void
        """

        raise NotImplementedError()

    def filepath(self):
        """
        Returns a full path to the report that will be placed in this
        report object's working directory.

        :returns: Full path to this report file.
        """

        raise NotImplementedError()

    def write_passing_check(self, check, *args):
        """
        Record in this report that <check> passed.

        :param check: Name of the check.
        :param args: Additional information about the check.
        :returns: void
        """

        self._load_check_result_pass(check, *args)
        if self._working_directory is not None:
            self.write()

    def write_failing_check(self, check, *args):
        """
        Record in this report that <check> failed.

        :param check: Name of the check.
        :param args: Additional information about the check.
        :returns: void
        """

        self._load_check_result_fail(check, *args)
        if self._working_directory is not None:
            self.write()

    def write(self):
        """
        Write the report into the working directory with internally
        stored results.

        :returns: void
        """

        raise NotImplementedError()


class CheckReport(Report):
    """
    A check report is a concise CSV record of every warning and error
    raised while validating inputs or cross-checking results, one row
    per message, in the order the checks ran.

    Message text and severity come from the error definition file
    (code, type, template); a type of `Warning` is not severe.
    """

    def __init__(self, root=None):
        """
        Initialize a new CheckReport that writes to the directory <root>.

        Passing <root> as None causes no output files to be produced.

        :param root: Path to the run's working directory.
        """

        super(CheckReport, self).__init__(root)

        self._report_batch = OrderedDict([
            ('Status', None),
            ('Error Type', []),
            ('Error Code', []),
            ('Check', None),
            ('Message', [])
        ])

        self.check_report = None
        self.messages = []

        self._error_definitions = {}
        self.read_error_definitions(config.PAVINGS_ERROR_CONFIG)

    def __enter__(self):
        """
        Open and set up the file where this check report will be written.
        """

        if self._working_directory is not None:
            self.check_report = open(self.filepath(), 'w')

            header = ','.join(self._report_batch.keys())
            self.check_report.write(header + '\n')

        return self

    def __exit__(self, *args):
        """
        Close the file where the check report has been written.
        """

        if self.check_report is not None:
            self.check_report.close()

    def _load_check_result_pass(self, check):
        self._report_batch['Status'] = 'P'
        self._report_batch['Check'] = check

    def _load_check_result_fail(self, check):
        self._report_batch['Status'] = 'F'
        self._report_batch['Check'] = check

    def filepath(self):
        """
        :returns: Full path to this check report file, or None.
        """

        if self._working_directory is None:
            return None
        else:
            return os.path.join(self._working_directory, 'check-report.csv')

    def read_error_definitions(self, filepath):
        """
        Loads the error definitions found in <filepath>.

        :param filepath: Path to an error definition file.
        :returns: void
        """

        with open(filepath) as error_definitions:
            reader = csv.reader(error_definitions, escapechar='\\')
            next(reader)  # Skip header line.

            for row in reader:
                if not row:
                    continue
                error_code = int(row[0])
                self._error_definitions[error_code] = row[1:3]

    def add_message(self, error_code, **kwargs):
        """
        Records a message of type <error_code> for the current check.

        :param error_code: Numeric code from the error definition file.
        :param kwargs: Keyword parameters to insert into the message.
        :returns: Message, and True iff the message is severe.
        """

        try:
            error_class, message_template = self._error_definitions[error_code]
            message = message_template.format(**kwargs)
        except KeyError as err:
            msg = f'Unrecognized error code {error_code} or field {err}'
            LOGGER.error(msg)
            raise ValueError(msg)

        self._report_batch['Error Code'].append(error_code)
        self._report_batch['Error Type'].append(error_class)
        self._report_batch['Message'].append(message)

        severe = error_class != 'Warning'
        self.messages.append((error_code, message, severe))
        return message, severe

    def add_error(self, err):
        """
        Records every message carried by a library exception: either an
        `errors` list of (code, kwargs) pairs or a single `code`/`kwargs`.

        :param err: exception raised by a pavings module
        :returns: `list` of (message, severe) pairs
        """

        errors = getattr(err, 'errors', None)
        if not errors:
            errors = [(getattr(err, 'code', 506),
                       getattr(err, 'kwargs', {'check': 'input',
                                               'reason': str(err)}))]

        return [self.add_message(code, **kwargs) for code, kwargs in errors]

    @property
    def severe(self):
        """`bool` of whether any severe message was recorded"""

        return any(severe for _, _, severe in self.messages)

    def write(self):
        """
        Append the current check's rows to the report and reset the batch.
        A check without messages gets a single row.

        :returns: void
        """

        if self.check_report is None:
            self._reset()
            return

        column_names = ['Error Type', 'Error Code', 'Message']
        rows = list(zip(*[self._report_batch[name] for name in column_names]))
        if not rows:
            rows = [(None, None, '')]

        for err_type, err_code, message in rows:
            tokens = [
                self._report_batch['Status'],
                err_type,
                err_code,
                self._report_batch['Check'],
                message.replace(',', '\\,')
            ]

            row = ','.join([
                '' if token is None else str(token) for token in tokens
            ])
            self.check_report.write(row + '\n')

        self.check_report.flush()
        self._reset()

    def _reset(self):
        for field, column in self._report_batch.items():
            if isinstance(column, list):
                self._report_batch[field].clear()
            else:
                self._report_batch[field] = None


class RunReport(Report):
    """
    A run report lists which checks passed and which failed, in blocks
    per check group. Each block starts with the group name, followed by
    lines of the form <status>: <check>, where <status> is Pass or Fail.
    """

    def __init__(self, root=None):
        """
        Initialize a new RunReport that will write to the directory <root>.

        :param root: Path to the run's working directory, or None.
        """

        super(RunReport, self).__init__(root)

        self._group_status = OrderedDict()

    def _load_check_result_pass(self, check, group):
        self._group_status.setdefault(group, []).append(('Pass', check))

    def _load_check_result_fail(self, check, group):
        self._group_status.setdefault(group, []).append(('Fail', check))

    @property
    def passed(self):
        return [check for results in self._group_status.values()
                for status, check in results if status == 'Pass']

    @property
    def failed(self):
        return [check for results in self._group_status.values()
                for status, check in results if status == 'Fail']

    def filepath(self):
        """
        :returns: Full path to this run report file, or None.
        """

        if self._working_directory is None:
            return None
        else:
            return os.path.join(self._working_directory, 'run_report')

    def summary(self):
        """
        :returns: `str` of the run report blocks
        """

        blocks = []
        for group, results in self._group_status.items():
            package = group + '\n'
            for status, check in results:
                package += f'{status}: {check}\n'
            blocks.append(package)

        return '\n'.join(blocks)

    def write(self):
        """
        Rewrite the run report with every result recorded so far.

        :returns: void
        """

        with open(self.filepath(), 'w') as run_report:
            run_report.write(self.summary())


def _cell(value):
    if isinstance(value, bool) or value is None:
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f'{value:.12g}'
    if isinstance(value, mpf):
        return mp.nstr(value, 15)
    if isinstance(value, str):
        return value
    try:
        return fraction2str(value)
    except (TypeError, ValueError):
        return str(value)


def _json_value(value):
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, mpf):
        return float(value)
    return _cell(value)


def write_sequence(rows, fmt='table', header=('n', 'value')):
    """
    Render a sequence of rows in one of the output formats

    :param rows: list of tuples, first column the index
    :param fmt: `table`, `json`, `csv` or `bfile`
    :param header: column names
    :returns: `str`
    """

    rows = [tuple(row) for row in rows]

    if fmt == 'bfile':
        for row in rows:
            if len(row) != 2 or not all(is_integral(v) for v in row):
                msg = 'b-file output needs integer (n, a(n)) pairs'
                LOGGER.error(msg)
                raise OutputFormatError(msg)
        return format_bfile((int(n), int(value)) for n, value in rows)

    if fmt == 'json':
        records = [OrderedDict(zip(header, map(_json_value, row)))
                   for row in rows]
        return json.dumps(records, indent=4)

    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(v) for v in row])
        return buffer.getvalue().rstrip('\n')

    if fmt == 'table':
        cells = [list(header)] + [[_cell(v) for v in row] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        lines = ['  '.join(c.rjust(w) for c, w in zip(r, widths))
                 for r in cells]
        return '\n'.join(lines)

    msg = f'Unknown output format {fmt}; expected one of {OUTPUT_FORMATS}'
    LOGGER.error(msg)
    raise OutputFormatError(msg, code=406, fmt=fmt)
