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

"""Tests for sfbslepian.result_table."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json

from absl.testing import absltest as unittest
import hypothesis
from hypothesis import strategies
import numpy as np
from sfbslepian import result_table


class UnitTestCells(unittest.TestCase):
  """Tests cell formatting."""

  def testFormatCell(self):
    self.assertEqual('0.5', result_table.FormatCell(0.5))
    self.assertEqual('0.16666666666666666', result_table.FormatCell(1 / 6))
    self.assertEqual('3', result_table.FormatCell(np.int64(3)))
    self.assertEqual('true', result_table.FormatCell(True))
    self.assertEqual('', result_table.FormatCell(None))
    self.assertEqual('neumann', result_table.FormatCell('neumann'))

  @hypothesis.given(strategies.floats(allow_nan=False))
  def testFloatsSurvive(self, value):
    cell = result_table.FormatCell(value)
    self.assertEqual(value, result_table.ParseCell(cell))

  def testParseText(self):
    self.assertEqual('W_d', result_table.ParseCell('W_d'))
    self.assertIs(False, result_table.ParseCell('false'))


class UnitTestResultTable(unittest.TestCase):
  """Tests the ResultTable class."""

  def setUp(self):
    super(UnitTestResultTable, self).setUp()
    self.table = result_table.ResultTable(['r', 'U'])
    self.table.AddRow([0.5, 1 / 6])
    self.table.AddRow([2, 0.25])

  def testCsv(self):
    self.assertEqual('r,U\n0.5,0.16666666666666666\n2,0.25\n',
                     self.table.Render('csv'))

  def testJson(self):
    document = json.loads(self.table.Render('json'))
    self.assertEqual(['r', 'U'], document['columns'])
    self.assertEqual([[0.5, 1 / 6], [2, 0.25]], document['rows'])
    self.assertEqual(self.table.Document(), document)

  def testTbl(self):
    output = self.table.Render('tbl')
    self.assertIn('0.16666666666666666', output)

  def testRowLength(self):
    self.assertRaises(result_table.DisplayError, self.table.AddRow, [1.0])

  def testUnknownDisplay(self):
    self.assertRaises(result_table.DisplayError, self.table.Render, 'nvp')


if __name__ == '__main__':
  unittest.main()
