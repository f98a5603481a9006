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

"""Reproducing kernel of the SFB band-limited space in R^d.

After the addition theorem the kernel of the space spanned by SFB functions
with degree l <= L and wavenumber k <= K depends on the two radii and the
cosine between the directions only:

  K(x, y) = (r1 r2)^((2-d)/2) sum_l I_{nu_l}(r1, r2; K) dim(d,l)/vol P_l(gamma)

with nu_l = l + (d-2)/2. Scaled by K^-d its diagonal tends to the dilated
profile W_d(r/kappa), kappa = L/K. The Paley-Wiener kernel (no degree cap) is
kept for comparison.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import math

import numpy as np
from scipy import special
from sfbslepian import bessel
from sfbslepian import harmonic

DomainError = bessel.DomainError

# K*r below which the diagonal is replaced by its value at the origin.
ORIGIN_THRESHOLD = 1e-6

NearDiagResult = collections.namedtuple(
    'NearDiagResult', ['ratio', 'radial_form', 'product_form'])

SpatialPoint = collections.namedtuple('SpatialPoint', ['radius', 'gamma'])


class Bandlimit(collections.namedtuple('Bandlimit', ['d', 'L', 'K'])):
  """Dimension, spherical harmonic bandwidth L and Bessel bandwidth K."""

  __slots__ = ()

  def __new__(cls, d, L, K):  # pylint: disable=invalid-name
    if int(d) != d or d < 2:
      raise DomainError('Dimension d must be an integer >= 2, found %r.' % (d,))
    if int(L) != L or L < 0:
      raise DomainError('L must be a non-negative integer, found %r.' % (L,))
    if not (np.isfinite(K) and K > 0):
      raise DomainError('K must be finite and > 0, found %r.' % (K,))
    return super(Bandlimit, cls).__new__(cls, int(d), int(L), float(K))

  @classmethod
  def FromKappa(cls, d, kappa, K):  # pylint: disable=invalid-name
    """Bandlimit with L = round(kappa * K)."""
    if not (np.isfinite(kappa) and kappa >= 0):
      raise DomainError('kappa must be finite and >= 0, found %r.' % (kappa,))
    return cls(d, int(round(kappa * K)), K)

  @property
  def kappa(self):
    return self.L / self.K

  @property
  def orders(self):
    """Bessel orders nu_l = l + (d-2)/2 for l = 0..L."""
    return np.arange(self.L + 1) + 0.5 * (self.d - 2)


def _Weights(bl):
  """dim(d, l) / vol(S^(d-1)) for l = 0..L."""
  vol = harmonic.SphereVolume(bl.d)
  return np.array([harmonic.HarmDim(bl.d, l) for l in range(bl.L + 1)],
                  dtype=float) / vol


def OriginValue(d, bandlimit):
  """Diagonal at the origin, K^d / (2^(d-2) Gamma(d/2)^2 d vol(S^(d-1)))."""

  return bandlimit ** d / (2.0 ** (d - 2) * math.gamma(0.5 * d) ** 2 * d *
                           harmonic.SphereVolume(d))


def _RadialSum(bl, r1, r2, legendre):
  """Ascending compensated sum shared by the full kernel and its diagonal."""

  if bl.K * max(r1, r2) < ORIGIN_THRESHOLD:
    return OriginValue(bl.d, bl.K)
  if min(r1, r2) <= 0:
    # One point at the origin, only l = 0 survives.
    r = max(r1, r2)
    nu = 0.5 * (bl.d - 2)
    x = bl.K * r
    # int_0^K J_nu(kr) (k/2)^nu/Gamma(nu+1) k dk = K^(nu+1) J_(nu+1)(Kr)/r.
    radial = (bl.K ** (nu + 1) * special.jv(nu + 1, x) / r /
              (2.0 ** nu * math.gamma(nu + 1)))
    return (r ** (-nu) * radial / harmonic.SphereVolume(bl.d))
  integrals = bessel.BandlimitedRadialIntegral(bl.orders, r1, r2, bl.K)
  terms = integrals * _Weights(bl) * legendre
  return (r1 * r2) ** (0.5 * (2 - bl.d)) * math.fsum(terms)


def KernelFull(bl, r1, r2, gamma):
  """Kernel between points of radii r1, r2 with direction cosine gamma.

  Args:
    bl: Bandlimit.
    r1: float, radius of the first point (>= 0).
    r2: float, radius of the second point (>= 0).
    gamma: float, cosine of the angle between the points, in [-1, 1].

  Returns:
    K_{L,K}(x, y) as a float.

  Raises:
    DomainError: invalid radii or gamma.
  """
  if not (np.isfinite(r1) and np.isfinite(r2) and r1 >= 0 and r2 >= 0):
    raise DomainError('Radii must be finite and >= 0, found %r, %r.' % (r1, r2))
  legendre = harmonic.LegendrePdAll(bl.d, bl.L, gamma)
  return _RadialSum(bl, float(r1), float(r2), legendre)


def KernelDiag(bl, r):
  """Kernel diagonal K_{L,K}(x, x) at |x| = r >= 0."""

  if not (np.isfinite(r) and r >= 0):
    raise DomainError('Radius must be finite and >= 0, found %r.' % (r,))
  return _RadialSum(bl, float(r), float(r), np.ones(bl.L + 1))


def KernelDiagNormalized(bl, r):
  """KernelDiag scaled by K^-d, tends to W_d(r/kappa)."""
  return KernelDiag(bl, r) / bl.K ** bl.d


def PwKernelDiag(d, bandlimit):
  """Paley-Wiener diagonal K^d / (2^d pi^(d/2) Gamma(d/2+1))."""
  return bandlimit ** d / (2.0 ** d * math.pi ** (0.5 * d) *
                           math.gamma(0.5 * d + 1))


def PwKernel(d, bandlimit, dist):
  """Paley-Wiener kernel of the ball |xi| <= K at distance dist.

  Args:
    d: int, dimension.
    bandlimit: float, K > 0.
    dist: float, distance between the points (>= 0).

  Returns:
    K^d (2 pi)^(-d/2) J_{d/2}(K dist) / (K dist)^(d/2).
  """
  if not (np.isfinite(dist) and dist >= 0):
    raise DomainError('Distance must be finite and >= 0, found %r.' % (dist,))
  x = bandlimit * dist
  if x < ORIGIN_THRESHOLD:
    return PwKernelDiag(d, bandlimit)
  return (bandlimit ** d / (2.0 * math.pi) ** (0.5 * d) *
          special.jv(0.5 * d, x) / x ** (0.5 * d))


def RadialForm(d, y_len):
  """Gamma(d/2+1) (2/|y|)^(d/2) J_{d/2}(|y|), equal to 1 at y = 0.

  This is the form J_{d/2}(|y|) / (2^(d/2) Gamma(d/2+1)), which vanishes at
  y = 0, rescaled by its small |y| behaviour so that it compares directly
  with the kernel ratio. near-diag writes the rescaled values.
  """
  if y_len < ORIGIN_THRESHOLD:
    return 1.0
  return (math.gamma(0.5 * d + 1) * (2.0 / y_len) ** (0.5 * d) *
          special.jv(0.5 * d, y_len))


def ProductForm(d, y_len, theta, radius, kappa):
  """sinc(|y| cos) times the (d-1) dimensional radial form at |y| sin kappa/r.

  Equal to 1 at y = 0, nan when kappa = 0.
  """
  if kappa == 0:
    return float('nan')
  along = y_len * math.cos(theta)
  across = y_len * math.sin(theta) / (radius / kappa)
  sinc = 1.0 if abs(along) < ORIGIN_THRESHOLD else math.sin(along) / along
  return sinc * RadialForm(d - 1, abs(across))


def NearDiagRatio(bl, r, y_len, theta):
  """K(x, x + y/K) / K(x, x) with the two comparison forms.

  x has radius r, y has length y_len and makes angle theta with x.

  Returns:
    NearDiagResult(ratio, radial_form, product_form).
  """
  if not (r > 0 and y_len >= 0 and 0 <= theta <= math.pi):
    raise DomainError('Need r > 0, y_len >= 0 and theta in [0, pi].')
  if y_len == 0:
    ratio = 1.0
  else:
    along = r + y_len * math.cos(theta) / bl.K
    across = y_len * math.sin(theta) / bl.K
    r2 = math.hypot(along, across)
    gamma = min(1.0, max(-1.0, along / r2))
    ratio = KernelFull(bl, r, r2, gamma) / KernelDiag(bl, r)
  return NearDiagResult(
      ratio=ratio,
      radial_form=RadialForm(bl.d, y_len),
      product_form=ProductForm(bl.d, y_len, theta, r, bl.kappa))
