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

"""Tests for sfbslepian.acceptance."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

from absl.testing import absltest as unittest
import mock
from sfbslepian import acceptance
from sfbslepian import bessel
from sfbslepian import profiles


class UnitTestLadder(unittest.TestCase):
  """Tests the trend helper."""

  def testNonIncreasing(self):
    self.assertTrue(acceptance._NonIncreasing([0.4, 0.2, 0.21, 0.1]))
    self.assertFalse(acceptance._NonIncreasing([0.4, 0.2, 0.3]))
    self.assertTrue(acceptance._NonIncreasing([0.1]))

  def testWindowCoversOnePeriod(self):
    window = acceptance._Window(128, 1.5)
    self.assertLen(window, acceptance.WINDOW_POINTS)
    self.assertAlmostEqual(2 * math.pi / 128, window[-1] - window[0],
                           delta=1e-15)
    self.assertAlmostEqual(1.5, window[acceptance.WINDOW_POINTS // 2],
                           delta=1e-15)


class UnitTestRunAcceptance(unittest.TestCase):
  """Tests check selection and reporting."""

  def testUnknown(self):
    self.assertRaises(KeyError, acceptance.RunAcceptance, ['bogus'])

  def testRunCheck(self):
    check = mock.Mock(return_value=(False, 2, 1))
    result = acceptance.RunCheck('fake', check, budget=100)
    self.assertEqual(('fake', False, 2.0, 1.0), result[:4])
    self.assertGreaterEqual(result.seconds, 0)

  @mock.patch.object(acceptance.tqdm, 'tqdm',
                     side_effect=lambda items, **_: items)
  def testSelection(self, mock_tqdm):
    fake = mock.Mock(return_value=(True, 0.0, 1.0))
    with mock.patch.object(acceptance, 'CHECKS',
                           (('first', fake, 1), ('second', fake, 1))):
      with mock.patch.object(acceptance, 'CHECK_NAMES', ['first', 'second']):
        results = acceptance.RunAcceptance(['second'], progress=True)
    self.assertEqual(['second'], [result.name for result in results])
    self.assertEqual(1, fake.call_count)
    mock_tqdm.assert_called_once()

  def testSuiteOrder(self):
    self.assertLen(acceptance.CHECKS, 10)
    self.assertEqual('closed_forms', acceptance.CHECK_NAMES[0])


class UnitTestChecks(unittest.TestCase):
  """Runs the fast checks."""

  def testClosedForms(self):
    passed, measured, target = acceptance.CheckClosedForms()
    self.assertTrue(passed)
    self.assertLessEqual(measured, target)

  def testBessel(self):
    passed, measured, _ = acceptance.CheckBessel()
    self.assertTrue(passed, measured)

  def testSumSquares(self):
    passed, measured, target = acceptance.CheckSumSquares()
    self.assertTrue(passed, measured)
    self.assertLessEqual(measured, target)

  def testWeightedSum(self):
    passed, measured, target = acceptance.CheckWeightedSum()
    self.assertTrue(passed, measured)
    self.assertLessEqual(measured, target)

  def testSumSquaresTracksEnvelope(self):
    # At r = 1.5 the pointwise error at L = 128 exceeds the one at L = 64.
    errors = [max(abs(bessel.BesselSumSquares(0, degree, degree * x) -
                      profiles.ProfileU(x))
                  for x in acceptance._Window(degree, 1.5))
              for degree in acceptance.BESSEL_LADDER]
    self.assertTrue(acceptance._NonIncreasing(errors), errors)


if __name__ == '__main__':
  unittest.main()
