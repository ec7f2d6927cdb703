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

import click

from pavings import config
from pavings.controller import admin, compare, verify
from pavings.enumeration import enumerate_
from pavings.log import setup_logger
from pavings.paving import analyze, mirror_double_
from pavings.series import asympt, rooted, unlabeled

__version__ = '0.1.dev0'

setup_logger(config.PAVINGS_LOGGING_LOGLEVEL, config.PAVINGS_LOGGING_LOGFILE)


@click.group()
@click.version_option(version=__version__)
def cli():
    pass


cli.add_command(admin)
cli.add_command(analyze)
cli.add_command(asympt)
cli.add_command(compare)
cli.add_command(enumerate_)
cli.add_command(mirror_double_)
cli.add_command(rooted)
cli.add_command(unlabeled)
cli.add_command(verify)
