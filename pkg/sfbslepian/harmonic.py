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

"""Spherical harmonic combinatorics on S^(d-1).

Dimensions of the degree-l harmonic spaces, the Legendre polynomials P_l^(d)
normalized to P_l^(d)(1) = 1 and the sphere and ball volumes that appear in
the addition theorem

  sum_m Y_lm(x) Y_lm(y) = dim(d, l) / vol(S^(d-1)) * P_l^(d)(<x, y>).
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

import numpy as np
from sfbslepian import bessel

DomainError = bessel.DomainError

# Dimensions are exact integers kept below 2**127.
MAX_DIMENSION = 2 ** 127


class Error(Exception):
  """Base class for errors."""


class DimensionOverflowError(Error, OverflowError):
  """Harmonic dimension exceeds the supported integer range."""


def _CheckDimension(d):
  if int(d) != d or d < 2:
    raise DomainError('Dimension d must be an integer >= 2, found %r.' % (d,))
  return int(d)


def _CheckDegree(l, name='l'):
  if int(l) != l or l < 0:
    raise DomainError('Degree %s must be a non-negative integer, found %r.' %
                      (name, l))
  return int(l)


def _Bounded(value, d, l):
  if value >= MAX_DIMENSION:
    raise DimensionOverflowError(
        'Harmonic dimension for d=%d, l=%d exceeds 2**127.' % (d, l))
  return value


def HarmDim(d, l):
  """Dimension of the degree-l spherical harmonics on S^(d-1).

  Args:
    d: int, ambient dimension (>= 2).
    l: int, degree (>= 0).

  Returns:
    C(l+d-1, l) - C(l+d-3, l-2), the second term taken as 0 for l < 2.

  Raises:
    DomainError: d < 2 or negative degree.
    DimensionOverflowError: result does not fit in 127 bits.
  """
  d = _CheckDimension(d)
  l = _CheckDegree(l)
  value = math.comb(l + d - 1, l)
  if l >= 2:
    value -= math.comb(l + d - 3, l - 2)
  return _Bounded(value, d, l)


def HarmDimCumulative(d, degree):
  """Sum of HarmDim(d, l) for l = 0..L, the dimension of Harm_L(S^(d-1))."""

  d = _CheckDimension(d)
  degree = _CheckDegree(degree, name='L')
  # sum_{l<=L} dim = C(L+d-1, d-1) + C(L+d-2, d-1).
  value = math.comb(degree + d - 1, d - 1) + math.comb(degree + d - 2, d - 1)
  return _Bounded(value, d, degree)


def HarmDimDifference(d, l):
  """C_{l+1} - C_l, exact."""
  return HarmDim(d, l + 1) - HarmDim(d, l)


def HarmDimLeading(d, l):
  """Leading order 2 l^(d-2) / Gamma(d-1) of HarmDim for large l."""

  d = _CheckDimension(d)
  l = _CheckDegree(l)
  return 2.0 * float(l) ** (d - 2) / math.gamma(d - 1)


def LegendrePdAll(d, degree, t):
  """P_l^(d)(t) for every l = 0..L.

  d = 2 gives the Chebyshev polynomials T_l, d >= 3 the Gegenbauer
  polynomials C_l^lambda normalized by their value at 1, lambda = (d-2)/2,
  through the recurrence

    (l + 2 lambda) P_{l+1} = 2 (l + lambda) t P_l - l P_{l-1}.

  Args:
    d: int, ambient dimension (>= 2).
    degree: int, highest degree L.
    t: float or array in [-1, 1].

  Returns:
    numpy array of shape (L+1,) + shape(t).

  Raises:
    DomainError: |t| > 1 or invalid d, L.
  """
  d = _CheckDimension(d)
  degree = _CheckDegree(degree, name='L')
  t = np.asarray(t, dtype=float)
  if not np.all(np.isfinite(t)) or np.any(np.abs(t) > 1.0):
    raise DomainError('Legendre argument must lie in [-1, 1], found %r.' % (t,))
  values = np.empty((degree + 1,) + t.shape)
  values[0] = 1.0
  if degree >= 1:
    values[1] = t
  lam = 0.5 * (d - 2)
  for n in range(1, degree):
    if d == 2:
      values[n + 1] = 2.0 * t * values[n] - values[n - 1]
    else:
      values[n + 1] = (2.0 * (n + lam) * t * values[n] -
                       n * values[n - 1]) / (n + 2.0 * lam)
  return values


def LegendrePd(d, l, t):
  """P_l^(d)(t) with P_l^(d)(1) = 1."""
  values = LegendrePdAll(d, _CheckDegree(l), t)[-1]
  if np.ndim(t) == 0:
    return float(values)
  return values


def SphereVolume(d):
  """Surface area of the unit sphere S^(d-1), 2 pi^(d/2) / Gamma(d/2)."""
  d = _CheckDimension(d)
  return 2.0 * math.pi ** (0.5 * d) / math.gamma(0.5 * d)


def BallVolume(d):
  """Volume of the unit ball in R^d."""
  return SphereVolume(d) / _CheckDimension(d)
