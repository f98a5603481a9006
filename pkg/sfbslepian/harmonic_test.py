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

"""Tests for sfbslepian.harmonic."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

from absl.testing import absltest as unittest
import hypothesis
from hypothesis import strategies
import numpy as np
from sfbslepian import harmonic


class UnitTestHarmDim(unittest.TestCase):
  """Tests dimension counting."""

  def testKnownValues(self):
    self.assertEqual(5, harmonic.HarmDim(3, 2))
    self.assertEqual(1, harmonic.HarmDim(2, 0))
    self.assertEqual(2, harmonic.HarmDim(2, 7))
    self.assertEqual(16, harmonic.HarmDim(4, 3))

  def testCumulative(self):
    self.assertEqual(11, harmonic.HarmDimCumulative(2, 5))
    self.assertEqual(16, harmonic.HarmDimCumulative(3, 3))
    self.assertEqual(14, harmonic.HarmDimCumulative(4, 2))
    for d in range(2, 7):
      self.assertEqual(sum(harmonic.HarmDim(d, l) for l in range(13)),
                       harmonic.HarmDimCumulative(d, 12))

  @hypothesis.given(strategies.integers(min_value=3, max_value=9),
                    strategies.integers(min_value=0, max_value=300))
  def testDifferenceIdentity(self, d, l):
    self.assertEqual(
        math.comb(l + d - 2, d - 3) + math.comb(l + d - 3, d - 3),
        harmonic.HarmDimDifference(d, l))

  def testLeadingOrder(self):
    for d in (3, 4, 5):
      ratio = harmonic.HarmDim(d, 10000) / harmonic.HarmDimLeading(d, 10000)
      self.assertAlmostEqual(1.0, ratio, delta=1e-2)

  def testRejects(self):
    self.assertRaises(harmonic.DomainError, harmonic.HarmDim, 1, 0)
    self.assertRaises(ValueError, harmonic.HarmDim, 3, -1)
    self.assertRaises(harmonic.DimensionOverflowError,
                      harmonic.HarmDim, 60, 10 ** 6)
    self.assertRaises(OverflowError, harmonic.HarmDimCumulative, 60, 10 ** 6)


class UnitTestLegendre(unittest.TestCase):
  """Tests the normalized Legendre polynomials."""

  def testNormalization(self):
    for d in range(2, 7):
      values = harmonic.LegendrePdAll(d, 40, 1.0)
      np.testing.assert_allclose(values, np.ones(41), rtol=1e-13)

  def testKnownValues(self):
    self.assertAlmostEqual(
        -1.0, harmonic.LegendrePd(2, 3, math.cos(math.pi / 3)), delta=1e-14)
    self.assertAlmostEqual(-0.5, harmonic.LegendrePd(3, 2, 0.0), delta=1e-15)
    self.assertEqual(1.0, harmonic.LegendrePd(5, 0, 0.3))

  def testChebyshev(self):
    t = np.linspace(-1, 1, 31)
    np.testing.assert_allclose(harmonic.LegendrePd(2, 9, t),
                               np.cos(9 * np.arccos(t)), atol=1e-12)

  @hypothesis.settings(deadline=None)
  @hypothesis.given(strategies.integers(min_value=2, max_value=6),
                    strategies.floats(min_value=-1.0, max_value=1.0))
  def testBounded(self, d, t):
    values = harmonic.LegendrePdAll(d, 64, t)
    self.assertLessEqual(np.max(np.abs(values)), 1.0 + 1e-12)

  def testRejectsOutOfRange(self):
    self.assertRaises(harmonic.DomainError, harmonic.LegendrePd, 3, 2, 1.01)


class UnitTestVolumes(unittest.TestCase):

  def testSphere(self):
    self.assertAlmostEqual(2 * math.pi, harmonic.SphereVolume(2))
    self.assertAlmostEqual(4 * math.pi, harmonic.SphereVolume(3))
    self.assertAlmostEqual(2 * math.pi ** 2, harmonic.SphereVolume(4))

  def testBall(self):
    self.assertAlmostEqual(4 * math.pi / 3, harmonic.BallVolume(3))
    self.assertRaises(harmonic.DomainError, harmonic.SphereVolume, 1)


if __name__ == '__main__':
  unittest.main()
