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

"""Desk-scale acceptance experiments.

Each check runs a finite surrogate of an asymptotic statement and returns a
CheckResult. For checks over a ladder of sizes `measured` is the error at the
last rung and `target` its tolerance; composite checks report their worst
error divided by its tolerance against a target of 1.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import math
import time

from absl import logging
import numpy as np
from scipy import optimize
from scipy import special
from sfbslepian import ballbasis
from sfbslepian import bessel
from sfbslepian import concentration
from sfbslepian import kernel
from sfbslepian import profiles
import tqdm

CheckResult = collections.namedtuple(
    'CheckResult', ['name', 'passed', 'measured', 'target', 'seconds'])

# Relative growth tolerated between consecutive rungs of a ladder.
LADDER_SLACK = 0.1

BESSEL_LADDER = (64, 128, 256, 512)
APPENDIX_LADDER = (250, 500, 1000, 2000)
SHANNON_DOMAIN = concentration.RadialDomain(0.0, 2.0)
SHANNON_K = 40.0
BIMODAL_LADDER = (20.0, 40.0, 60.0)
LOEWNER_LADDER = (10, 20, 40)
BALL_LADDER = (50.0, 100.0, 200.0)

# Samples per sup window, about 20 per period of J_l(L r)^2.
WINDOW_POINTS = 41

PROGRESS_MESSAGE = '#! Checks:'


def _NonIncreasing(errors):
  """errors[i+1] <= (1 + LADDER_SLACK) errors[i] for all i."""
  return all(after <= (1 + LADDER_SLACK) * before
             for before, after in zip(errors, errors[1:]))


def _Window(degree, r):
  """Radii within pi/L of r, at least one period of J_l(L r)^2."""
  half = math.pi / degree
  return np.linspace(r - half, r + half, WINDOW_POINTS)


def CheckClosedForms():
  """Integrated W_2 and W_3 against their closed forms."""

  grid = np.linspace(0.05, 5.0, 200)
  error = max(
      float(np.max(np.abs(profiles.ProfileWd(2, grid) -
                          profiles.ClosedFormW2(grid)))),
      float(np.max(np.abs(profiles.ProfileWd(3, grid) -
                          profiles.ClosedFormW3(grid)))))
  return error <= 1e-9, error, 1e-9


def _SumSquaresLadder(func, target, radii, tolerance):
  """Sup error over the window around each radius, along BESSEL_LADDER."""

  worst = 0.0
  trend = True
  for r in radii:
    errors = [max(abs(func(degree, x) - target(x))
                  for x in _Window(degree, r))
              for degree in BESSEL_LADDER]
    logging.debug('Ladder at r=%s: %s', r, errors)
    trend = trend and _NonIncreasing(errors)
    worst = max(worst, errors[-1])
  return trend and worst <= tolerance, worst, tolerance


def CheckSumSquares():
  """Sum of J_l(L r)^2 tends to U(r)."""
  return _SumSquaresLadder(
      lambda degree, r: bessel.BesselSumSquares(0, degree, degree * r),
      profiles.ProfileU, (0.3, 0.5, 0.8, 1.5, 2.5), 0.02)


def CheckWeightedSum():
  """Dimension weighted sum for d = 3 tends to U_3(r)."""
  return _SumSquaresLadder(
      lambda degree, r: profiles.WeightedBesselSum(3, degree, r),
      lambda r: profiles.ProfileUd(3, r), (0.3, 0.5, 0.8, 1.5, 2.5), 0.03)


def _KernelDiagLadder(d, kappa, ladder):
  grid = np.linspace(0.1 * kappa, 3.0 * kappa, 60)
  target = profiles.ProfileWd(d, grid, kappa)
  errors = []
  for bandlimit in ladder:
    bl = kernel.Bandlimit.FromKappa(d, kappa, bandlimit)
    values = np.array([kernel.KernelDiagNormalized(bl, r) for r in grid])
    errors.append(float(np.max(np.abs(values - target))))
  logging.debug('Kernel ladder d=%d kappa=%s: %s', d, kappa, errors)
  return errors


def CheckKernelDiag():
  """K^-d K(x, x) tends to W_d(|x|/kappa)."""

  worst = 0.0
  trend = True
  for d, kappa, ladder in ((2, 0.5, (32.0, 64.0, 128.0, 256.0)),
                           (2, 1.0, (32.0, 64.0, 128.0, 256.0)),
                           (3, 1.0, (16.0, 32.0, 64.0))):
    errors = _KernelDiagLadder(d, kappa, ladder)
    trend = trend and _NonIncreasing(errors)
    worst = max(worst, errors[-1] / profiles.WPlateau(d))
  return trend and worst <= 0.02, worst, 0.02


def CheckTraceIdentities():
  """Trace and HS norm of the concentration operator on a disk."""

  bl = kernel.Bandlimit.FromKappa(2, 1.0, SHANNON_K)
  spectrum = concentration.ComputeSpectrum(bl, SHANNON_DOMAIN)
  trace = spectrum.Trace()
  integral = concentration.KernelDiagIntegral(bl, SHANNON_DOMAIN)
  plateau = concentration.PlateauPrediction(2, 1.0, SHANNON_DOMAIN)
  scale = SHANNON_K ** 2
  worst = max(abs(trace / integral - 1.0) / 1e-8,
              abs(trace / scale / plateau - 1.0) / 0.1,
              abs(spectrum.HsNormSq() / scale / plateau - 1.0) / 0.1)
  return worst <= 1.0, worst, 1.0


def CheckBimodal():
  """Plateau count matches the prediction and the middle band thins out."""

  plateau = concentration.PlateauPrediction(2, 1.0, SHANNON_DOMAIN)
  mids = []
  high = 0.0
  for bandlimit in BIMODAL_LADDER:
    bl = kernel.Bandlimit.FromKappa(2, 1.0, bandlimit)
    spectrum = concentration.ComputeSpectrum(bl, SHANNON_DOMAIN)
    scale = bandlimit ** 2
    mids.append(concentration.CountBetween(spectrum, 0.05, 0.95) / scale)
    high = concentration.CountAtLeast(spectrum, 0.5) / scale
  logging.debug('Middle band densities: %s', mids)
  error = abs(high / plateau - 1.0)
  decreasing = all(after < before for before, after in zip(mids, mids[1:]))
  return decreasing and error <= 0.1, error, 0.1


def CheckLoewner():
  """Ordered eigenvalues grow with the degree cap."""

  nodes = concentration.NodeCount(SHANNON_K, SHANNON_DOMAIN)
  spectra = [concentration.ComputeSpectrum(
      kernel.Bandlimit(2, degree, SHANNON_K), SHANNON_DOMAIN, nodes=nodes)
             for degree in LOEWNER_LADDER]
  violations = sum(not concentration.LoewnerDominates(low, high)
                   for low, high in zip(spectra, spectra[1:]))
  return violations == 0, float(violations), 0.0


def CheckBallDiag():
  """Ball kernel diagonals approach K^2/(4 pi) inside the disk."""

  grid = np.linspace(0.1, 0.8, 36)
  level = 1.0 / (4.0 * math.pi)
  worst = 0.0
  passed = True
  for bc in ballbasis.BOUNDARY_CONDITIONS:
    errors = []
    for bandlimit in BALL_LADDER:
      basis = ballbasis.BallBasis(2, int(bandlimit), bandlimit, bc)
      values = basis.Diag(grid) / bandlimit ** 2
      errors.append(float(np.max(np.abs(values - level))) / level)
      boundary = basis.Diag(1.0) / bandlimit ** 2
      if bc == ballbasis.DIRICHLET and boundary >= 1e-3:
        passed = False
    logging.debug('Ball ladder %s: %s', bc, errors)
    passed = passed and _NonIncreasing(errors)
    worst = max(worst, errors[-1])
  return passed and worst <= 0.05, worst, 0.05


def CheckBessel():
  """Zeros, recurrences, bounds, orthogonality and the summed identity."""

  oracle = optimize.bisect(lambda t: special.jv(0, t), 2.0, 3.0, xtol=1e-15)
  ratios = [abs(bessel.BesselZeros(0, 1).zeros[0] - oracle) / 1e-10]

  t = np.linspace(0.1, 200.0, 400)
  for order in (1.0, 1.5, 2.5, 10.0, 40.0):
    residual = (bessel.BesselJ(order - 1, t) + bessel.BesselJ(order + 1, t) -
                2 * order / t * bessel.BesselJ(order, t))
    scale = np.maximum(1.0, np.abs(bessel.BesselJ(order, t)))
    ratios.append(float(np.max(np.abs(residual) / scale)) / 1e-10)

  for order in (1.0, 2.0, 5.0, 10.0, 50.0):
    bounds = bessel.WatsonBoundsAt(order)
    peak = float(np.max(np.abs(bessel.BesselJ(order,
                                              np.linspace(0, order, 2001)))))
    ratios.append(bounds.value / bounds.value_bound)
    ratios.append(peak / bounds.value)

  ratios.append(abs(bessel.OrthogonalityIntegral(1.0, 2.0, 1.0, 2000.0) -
                    0.25) / 1e-4)
  ratios.append(abs(bessel.SumSquaresIdentity(1.0, 50, 80.0) -
                    bessel.BesselSumSquares(1.0, 50, 80.0)) / 1e-4)
  worst = max(ratios)
  return worst <= 1.0, worst, 1.0


def CheckAppendix():
  """A_N(U) tends to B(U) and B(U) = U - U_3."""

  r = 0.7
  limit = profiles.AppendixFunctionalB(3, r, profiles.ProfileU)
  errors = [abs(profiles.AppendixFunctionalA(3, count, r, profiles.ProfileU) -
                limit) for count in APPENDIX_LADDER]
  grid = np.linspace(0.05, 5.0, 50)
  identity = max(abs(profiles.AppendixFunctionalB(3, x, profiles.ProfileU) -
                     profiles.ProfileU(x) + profiles.ProfileUd(3, x))
                 for x in grid)
  passed = (_NonIncreasing(errors) and errors[-1] <= 0.01 and
            identity <= 1e-8)
  return passed, errors[-1], 0.01


# Name, check and the runtime it is expected to finish in (seconds).
CHECKS = (
    ('closed_forms', CheckClosedForms, 5),
    ('sum_squares', CheckSumSquares, 30),
    ('weighted_sum', CheckWeightedSum, 60),
    ('kernel_diag', CheckKernelDiag, 300),
    ('trace_identities', CheckTraceIdentities, 120),
    ('bimodal', CheckBimodal, 300),
    ('loewner', CheckLoewner, 120),
    ('ball_diag', CheckBallDiag, 180),
    ('bessel', CheckBessel, 30),
    ('appendix', CheckAppendix, 30),
)

CHECK_NAMES = [name for name, _, _ in CHECKS]


def RunCheck(name, check, budget=None):
  """Runs one check and times it."""

  start = time.time()
  passed, measured, target = check()
  seconds = time.time() - start
  if budget is not None and seconds > budget:
    logging.warning('Check %s took %.1fs, expected under %ds.', name, seconds,
                    budget)
  logging.info('Check %s: passed=%s measured=%s target=%s.', name, passed,
               measured, target)
  return CheckResult(name, bool(passed), float(measured), float(target),
                     seconds)


def RunAcceptance(names=None, progress=False):
  """Runs the named checks, all of them by default, in suite order.

  Raises:
    KeyError: an unknown check name.
  """
  if names:
    unknown = set(names) - set(CHECK_NAMES)
    if unknown:
      raise KeyError('Unknown checks: %s.' % ', '.join(sorted(unknown)))
  selected = [entry for entry in CHECKS if not names or entry[0] in names]
  iterator = selected
  if progress:
    iterator = tqdm.tqdm(selected, desc=PROGRESS_MESSAGE)
  return [RunCheck(name, check, budget) for name, check, budget in iterator]
