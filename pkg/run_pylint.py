# -*- coding: utf-8 -*-
# Copyright 2018 University of Groningen
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""PyLint wrapper with a --fail-under threshold; lints the contactgrad package when no module is given."""

import argparse
import sys
from pylint import lint

DEFAULT_TARGETS = ['contactgrad']
MAX_LINE_LENGTH = 120

desc = "PyLint wrapper that add the --fail-under option."\
       " All other arguments are passed to pylint."
parser = argparse.ArgumentParser(description=desc, allow_abbrev=False)
parser.add_argument('--fail-under', dest='threshold', type=float, default=9.75,
                    help='If the final score is more than THRESHOLD, exit with'
                    ' exitcode 0, and pylint\'s exitcode otherwise.')

args, remaining_args = parser.parse_known_args()
if not [arg for arg in remaining_args if not arg.startswith('-')]:
    remaining_args += DEFAULT_TARGETS
remaining_args = ['--max-line-length={length}'.format(length=MAX_LINE_LENGTH)] + remaining_args

try:
    run = lint.Run(remaining_args, exit=False)
except TypeError:  # pylint < 2.5
    run = lint.Run(remaining_args, do_exit=False)
stats = run.linter.stats
score = stats['global_note'] if isinstance(stats, dict) else stats.global_note

if score < args.threshold:
    sys.exit(run.linter.msg_status)
