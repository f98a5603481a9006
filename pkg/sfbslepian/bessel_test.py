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

"""Tests for sfbslepian.bessel."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

from absl.testing import absltest as unittest
import hypothesis
from hypothesis import strategies
import numpy as np
from scipy import integrate
from sfbslepian import bessel


def SeriesJ(order, t, terms=80):
  """Power series oracle for J_v(t), moderate t only."""
  total = 0.0
  for m in range(terms):
    total += ((-1) ** m * (0.5 * t) ** (2 * m + order) /
              (math.factorial(m) * math.gamma(m + order + 1)))
  return total


class UnitTestBesselJ(unittest.TestCase):
  """Tests values and derivatives."""

  def testOrigin(self):
    self.assertEqual(1.0, bessel.BesselJ(0, 0.0))
    self.assertEqual(0.0, bessel.BesselJ(2.5, 0.0))

  def testHalfOrderZero(self):
    self.assertAlmostEqual(0.0, bessel.BesselJ(0.5, math.pi), delta=1e-14)

  def testAgainstSeries(self):
    self.assertAlmostEqual(0.44005058574493, bessel.BesselJ(1, 1.0),
                           delta=1e-13)
    for order, t in ((0, 3.7), (2.5, 6.0), (7, 4.2)):
      self.assertAlmostEqual(SeriesJ(order, t), bessel.BesselJ(order, t),
                             delta=1e-12)

  def testArrayInput(self):
    values = bessel.BesselJ(np.array([0.0, 1.0]), np.array([0.0, 1.0]))
    self.assertEqual((2,), values.shape)
    self.assertEqual(1.0, values[0])

  def testRejectsBadDomain(self):
    self.assertRaises(bessel.DomainError, bessel.BesselJ, 1, -0.1)
    self.assertRaises(bessel.DomainError, bessel.BesselJ, -1, 0.5)
    self.assertRaises(bessel.DomainError, bessel.BesselJ, 1, float('nan'))
    self.assertRaises(ValueError, bessel.BesselJ, 1, float('inf'))

  def testPrime(self):
    self.assertAlmostEqual((SeriesJ(0, 1.0) - SeriesJ(2, 1.0)) / 2,
                           bessel.BesselJPrime(1, 1.0), delta=1e-14)
    self.assertAlmostEqual(0.32514710081, bessel.BesselJPrime(1, 1.0),
                           delta=1e-11)
    self.assertEqual(0.0, bessel.BesselJPrime(0, 0.0))
    self.assertAlmostEqual(0.5, bessel.BesselJPrime(1, 0.0), delta=1e-15)
    self.assertRaises(bessel.DomainError, bessel.BesselJPrime, 2, 0.0)

  @hypothesis.settings(max_examples=60, deadline=None)
  @hypothesis.given(strategies.floats(min_value=1.0, max_value=80.0),
                    strategies.floats(min_value=0.1, max_value=200.0))
  def testRecurrence(self, order, t):
    left = bessel.BesselJ(order - 1, t) + bessel.BesselJ(order + 1, t)
    right = 2.0 * order / t * bessel.BesselJ(order, t)
    self.assertLessEqual(abs(left - right),
                         1e-10 * max(1.0, abs(bessel.BesselJ(order, t))))

  def testWatsonBounds(self):
    for order in (1, 2, 5, 10, 50):
      bounds = bessel.WatsonBoundsAt(order)
      self.assertLessEqual(bounds.value, bounds.value_bound)
      grid = np.linspace(0.0, order, 400)
      self.assertAlmostEqual(bounds.value,
                             np.max(np.abs(bessel.BesselJ(order, grid))),
                             delta=1e-15)
    self.assertAlmostEqual(0.44731, bessel.WATSON_VALUE_CONSTANT, delta=1e-5)
    self.assertAlmostEqual(0.41085, bessel.WATSON_SLOPE_CONSTANT, delta=1e-5)
    bounds = bessel.WatsonBoundsAt(10)
    self.assertLessEqual(bounds.slope, bounds.slope_bound)

  def testPeakConstant(self):
    for order in (10, 40):
      grid = np.linspace(0.01, order + 60.0, 20000)
      peak = np.max(np.abs(bessel.BesselJ(order, grid)))
      self.assertLessEqual(
          peak, bessel.BESSEL_PEAK_CONSTANT * order ** (-1.0 / 3) * (1 + 1e-3))


class UnitTestBesselZeros(unittest.TestCase):
  """Tests the zero finder."""

  def testFirstZeroOfJ0(self):
    zeros = bessel.BesselZeros(0, 1)
    self.assertEqual(0, zeros.order)
    self.assertAlmostEqual(2.404825557695773, zeros.zeros[0], delta=1e-12)

  def testHalfOrder(self):
    zeros = bessel.BesselZeros(0.5, 3).zeros
    for n, zero in enumerate(zeros, 1):
      self.assertAlmostEqual(n * math.pi, zero, delta=1e-12)

  def testLargerThanOrder(self):
    zeros = bessel.BesselZeros(5, 1).zeros
    self.assertEqual(1, len(zeros))
    self.assertGreater(zeros[0], 5)

  def testInterlace(self):
    lower = bessel.BesselZeros(3, 12).zeros
    upper = bessel.BesselZeros(4, 12).zeros
    self.assertEqual(sorted(lower), lower)
    for i in range(11):
      self.assertLess(lower[i], upper[i])
      self.assertLess(upper[i], lower[i + 1])

  def testLargeOrderLadder(self):
    zeros = bessel.BesselZeros(120.5, 30).zeros
    self.assertTrue(all(b > a for a, b in zip(zeros, zeros[1:])))
    for zero in zeros:
      self.assertLess(abs(bessel.BesselJ(120.5, zero)), 1e-10)

  def testRejectsCount(self):
    self.assertRaises(bessel.DomainError, bessel.BesselZeros, 1, 0)

  def testBracketRootsOnGrid(self):
    # Root landing exactly on a scan point is reported once.
    roots = bessel.BracketRoots(lambda x: x - 1.0, 0.0, 2.0, step=0.5)
    self.assertEqual([1.0], roots)


class UnitTestRadialIntegral(unittest.TestCase):
  """Tests the band-limited radial integral."""

  def testHalfOrderVanishes(self):
    self.assertAlmostEqual(
        0.0, bessel.BandlimitedRadialIntegral(0.5, 1.0, 2.0, math.pi),
        delta=1e-14)

  def testHalfOrderClosedForm(self):
    a, b, k = 0.6, 1.3, 7.0
    expected = (math.sin((a - b) * k) / (a - b) -
                math.sin((a + b) * k) / (a + b)) / (math.pi * math.sqrt(a * b))
    self.assertAlmostEqual(
        expected, bessel.BandlimitedRadialIntegral(0.5, a, b, k), delta=1e-12)

  def testDiagonalAtZero(self):
    j01 = bessel.BesselZeros(0, 1).zeros[0]
    expected = 0.5 * j01 ** 2 * bessel.BesselJ(1, j01) ** 2
    self.assertAlmostEqual(
        expected, bessel.BandlimitedRadialIntegral(0, 1.0, 1.0, j01),
        delta=1e-12)
    oracle, _ = integrate.quad(lambda k: bessel.BesselJ(0, k) ** 2 * k,
                               0.0, j01, epsabs=1e-14)
    self.assertAlmostEqual(oracle, expected, delta=1e-12)

  def testContinuityAcrossSwitch(self):
    near = bessel.BandlimitedRadialIntegral(2, 0.7, 0.700000001, 50.0)
    diag = bessel.BandlimitedRadialIntegral(2, 0.7, 0.7, 50.0)
    self.assertAlmostEqual(diag, near, delta=1e-8 * abs(diag))

  def testBranchesAgreeAtPanelSwitch(self):
    a, k = 0.7, 50.0
    gap = bessel.CROSS_SEPARATION / (k * k * a)
    for order in (0.0, 2.0, 10.0):
      for b in (a + 0.999 * gap, a + 1.001 * gap):
        panels = bessel._PanelIntegral(order, a, b, k)
        cross = bessel._LommelCross(order, a, b, k)
        self.assertAlmostEqual(1.0, cross / panels, delta=1e-10)
        self.assertAlmostEqual(
            1.0, bessel.BandlimitedRadialIntegral(order, a, b, k) / panels,
            delta=1e-10)

  def testPanelsAgainstQuadrature(self):
    a, b, k = 0.7, 0.7 + 1e-6, 50.0
    oracle, _ = integrate.quad(
        lambda t: t * bessel.BesselJ(2, t * a) * bessel.BesselJ(2, t * b),
        0.0, k, epsabs=0.0, epsrel=1e-13, limit=200)
    self.assertAlmostEqual(
        1.0, bessel.BandlimitedRadialIntegral(2, a, b, k) / oracle,
        delta=1e-10)

  def testBranchesAgreeAtDiagonalSwitch(self):
    a, k = 0.7, 50.0
    for order in (0.0, 2.0, 10.0):
      diag = bessel.BandlimitedRadialIntegral(order, a, a, k)
      for factor in (0.5, 2.0):
        b = a * (1.0 + factor * bessel.COINCIDENCE_RTOL)
        self.assertAlmostEqual(
            1.0, bessel.BandlimitedRadialIntegral(order, a, b, k) / diag,
            delta=1e-10)

  def testSmallArgument(self):
    oracle, _ = integrate.quad(lambda k: bessel.BesselJ(1.5, k * 0.01) ** 2 * k,
                               0.0, 30.0, epsabs=0.0, epsrel=1e-12)
    self.assertAlmostEqual(
        1.0, bessel.BandlimitedRadialIntegral(1.5, 0.01, 0.01, 30.0) / oracle,
        delta=1e-10)

  def testSymmetricAndBroadcast(self):
    a = np.array([[0.2], [0.9]])
    b = np.array([[0.5, 0.9]])
    values = bessel.BandlimitedRadialIntegral(3, a, b, 20.0)
    swapped = bessel.BandlimitedRadialIntegral(3, b.T, a.T, 20.0)
    self.assertEqual((2, 2), values.shape)
    np.testing.assert_allclose(values, swapped.T, rtol=1e-12)

  def testRejectsNonPositive(self):
    self.assertRaises(bessel.DomainError,
                      bessel.BandlimitedRadialIntegral, 1, 0.0, 1.0, 2.0)
    self.assertRaises(bessel.DomainError,
                      bessel.BandlimitedRadialIntegral, 1, 1.0, 1.0, 0.0)


class UnitTestSumSquares(unittest.TestCase):
  """Tests the squared Bessel sums and their identities."""

  def testOrigin(self):
    self.assertEqual(1.0, bessel.BesselSumSquares(0, 10, 0.0))

  def testPlateau(self):
    self.assertAlmostEqual(0.5, bessel.BesselSumSquares(0, 512, 256.0),
                           delta=0.02)

  @hypothesis.settings(max_examples=25, deadline=None)
  @hypothesis.given(strategies.floats(min_value=0.0, max_value=500.0))
  def testBoundedByOne(self, x):
    self.assertLessEqual(bessel.BesselSumSquares(3, 200, x), 1.0)

  def testOrthogonality(self):
    value = bessel.OrthogonalityIntegral(1, 2.0, 1.0, 2000.0)
    self.assertAlmostEqual(0.25, bessel.OrthogonalityClosedForm(1, 2.0, 1.0))
    self.assertAlmostEqual(0.25, value, delta=1e-4)
    self.assertRaises(bessel.DomainError, bessel.OrthogonalityClosedForm,
                      0, 1.0, 2.0)

  def testIntegratedRecurrence(self):
    self.assertAlmostEqual(bessel.BesselSumSquares(1, 50, 80.0),
                           bessel.SumSquaresIdentity(1, 50, 80.0),
                           delta=1e-4)


if __name__ == '__main__':
  unittest.main()
