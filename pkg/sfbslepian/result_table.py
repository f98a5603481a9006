# Copyright 2026 The sfbslepian Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied. See the License for the specific language governing
# permissions and limitations under the License.

"""Tabular results rendered as csv, json or a formatted table.

Cells are stored as text. Floats are written with 17 significant digits so
that every value read back from csv or json is the same double.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import numbers

from absl import logging
from textfsm import texttable
from textfsm.texttable import TableError

DISPLAY_FORMATS = ['csv', 'json', 'tbl']

FLOAT_FORMAT = '%.17g'

# Formatted tables wider than this wrap their cells.
DEFAULT_WIDTH = 120


class Error(Exception):
  """Base class for errors."""


class DisplayError(Error):
  """Unknown display format or a table that cannot be rendered."""


def FormatCell(value):
  """Text form of a single cell."""

  if value is None:
    return ''
  if isinstance(value, bool):
    return 'true' if value else 'false'
  if isinstance(value, numbers.Integral):
    return '%d' % value
  if isinstance(value, numbers.Real):
    return FLOAT_FORMAT % value
  return str(value)


def ParseCell(cell):
  """Inverse of FormatCell for numeric cells, text is returned unchanged."""

  if cell in ('true', 'false'):
    return cell == 'true'
  for kind in (int, float):
    try:
      return kind(cell)
    except ValueError:
      continue
  return cell


class ResultTable(texttable.TextTable):
  """TextTable with a fixed header and pre-formatted cells."""

  def __init__(self, columns):
    super(ResultTable, self).__init__()
    self.separator = ','
    self.header = list(columns)
    self._columns = list(columns)

  @property
  def columns(self):
    return list(self._columns)

  def AddRow(self, values):
    """Appends one row, values in header order."""

    if len(values) != len(self._columns):
      raise DisplayError('Row has %d values, table has %d columns.' %
                         (len(values), len(self._columns)))
    self.Append([FormatCell(value) for value in values])

  def Rows(self):
    """Rows as lists of parsed cell values."""
    return [[ParseCell(cell) for cell in row.values] for row in self]

  def Document(self):
    """Dictionary form used for json output."""
    return {'columns': self.columns, 'rows': self.Rows()}

  def Csv(self):
    return str(self)

  def Tbl(self, width=DEFAULT_WIDTH):
    """Human readable table, allows the text to wrap once if too narrow."""

    try:
      return self.FormattedTable(width)
    except TableError:
      logging.debug('Table too wide for %d columns, retry wrapped.', width)
      try:
        return self.FormattedTable(width * 2)
      except TableError as error_message:
        raise DisplayError(str(error_message))

  def Render(self, display):
    """Renders the table in one of DISPLAY_FORMATS."""

    if display == 'csv':
      return self.Csv()
    if display == 'json':
      return Dumps(self.Document())
    if display == 'tbl':
      return self.Tbl()
    raise DisplayError('Unsupported display format: %s.' % repr(display))


def Dumps(document):
  """Deterministic json text of a result document."""
  return json.dumps(document, sort_keys=True, indent=1)
