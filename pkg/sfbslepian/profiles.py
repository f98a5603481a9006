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

"""Limit profiles of squared Bessel sums and of the SFB kernel diagonal.

  U(r)        arcsecant step, 1/2 on [0, 1], 1/2 - arcsec(r)/pi beyond.
  U_d(r)      (r^(d-2)/pi) int_1^inf t^(1-d)/sqrt(t^2-1) dt         r <= 1
              (1/pi) int_1^inf t^(1-d)/sqrt(r^2 t^2-1) dt            r > 1
  W_d(rho)    2/(Gamma(d-1) vol(S^(d-1))) rho^(-d) int_0^rho U_d(t) t dt

Both improper integrals become proper under t = 1/(min(1, r) sin(phi)),

  U_d(r) = (r^(d-2)/pi) int_0^arcsin(min(1, 1/r)) sin(phi)^(d-2) dphi,

which removes the endpoint singularity. f_<kappa>(r) = f(r/kappa) is the
dilation used for every profile.

The module also carries the tail expansions and the two functionals A_N, B
that relate U and U_d through a weighted step-function average.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import math

import numpy as np
from scipy import integrate
from scipy import special
from sfbslepian import bessel
from sfbslepian import harmonic

DomainError = bessel.DomainError

PROFILE_KINDS = ('U', 'U_d', 'W_d')

# Radius at which the tail limits are sampled.
TAIL_RADIUS = 1e4

_QUAD_OPTIONS = {'epsabs': 1e-13, 'epsrel': 1e-12, 'limit': 200}

ProfileSpec = collections.namedtuple('ProfileSpec', ['d', 'kind', 'kappa'])

TailValues = collections.namedtuple('TailValues', ['u_tail', 'w_tail'])


def _CheckRadius(r):
  x = np.asarray(r, dtype=float)
  if not np.all(np.isfinite(x)) or np.any(x < 0):
    raise DomainError('Radius must be finite and >= 0, found %r.' % (r,))
  return x


def _CheckDimension(d, minimum=2):
  if int(d) != d or d < minimum:
    raise DomainError('Dimension d must be an integer >= %d, found %r.' %
                      (minimum, d))
  return int(d)


def _Map(func, r):
  """Applies a scalar function over a scalar or array of radii."""
  x = _CheckRadius(r)
  if x.ndim == 0:
    return float(func(float(x)))
  return np.array([func(float(value)) for value in x.ravel()]).reshape(x.shape)


def PlateauCoefficient(d):
  """u_c with U_d(r) = u_c r^(d-2) on [0, 1]."""
  d = _CheckDimension(d)
  return special.beta(0.5 * (d - 1), 0.5) / (2.0 * math.pi)


def WNormalization(d):
  """2 / (Gamma(d-1) vol(S^(d-1)))."""
  d = _CheckDimension(d)
  return 2.0 / (math.gamma(d - 1) * harmonic.SphereVolume(d))


def WPlateau(d):
  """Constant value of W_d on [0, 1]."""
  return WNormalization(d) * PlateauCoefficient(d) / d


def ProfileU(r):
  """Arcsecant step profile, continuous at r = 1."""

  def _U(x):
    if x <= 1.0:
      return 0.5
    # 1/2 - arcsec(x)/pi == arcsin(1/x)/pi without the cancellation.
    return math.asin(1.0 / x) / math.pi

  return _Map(_U, r)


def _UdScalar(d, x):
  if d == 2:
    return 0.5 if x <= 1.0 else math.asin(1.0 / x) / math.pi
  if d == 3:
    if x <= 1.0:
      return x / math.pi
    return 1.0 / (math.pi * (x + math.sqrt(x * x - 1.0)))
  if x == 0:
    return 0.0
  upper = math.pi / 2 if x <= 1.0 else math.asin(1.0 / x)
  value, _ = integrate.quad(lambda phi: math.sin(phi) ** (d - 2), 0.0, upper,
                            **_QUAD_OPTIONS)
  return x ** (d - 2) * value / math.pi


def ProfileUd(d, r):
  """Dimension-weighted profile U_d.

  Args:
    d: int, ambient dimension (>= 2).
    r: float or array, non-negative radius.

  Returns:
    U_d(r); U_2 is U itself and U_3 has a closed form, higher d is integrated.

  Raises:
    DomainError: d < 2 or negative radius.
  """
  d = _CheckDimension(d)
  return _Map(lambda x: _UdScalar(d, x), r)


def _WdScalar(d, rho):
  plateau = WPlateau(d)
  if rho <= 1.0:
    return plateau
  body, _ = integrate.quad(lambda t: _UdScalar(d, t) * t, 1.0, rho,
                           **_QUAD_OPTIONS)
  return plateau * rho ** (-d) + WNormalization(d) * body * rho ** (-d)


def ProfileWd(d, r, kappa=1.0):
  """Kernel-diagonal limit profile W_d dilated by kappa.

  Args:
    d: int, ambient dimension (>= 2).
    r: float or array, non-negative radius.
    kappa: float, dilation ratio L/K (> 0).

  Returns:
    W_d(r/kappa), the plateau WPlateau(d) for r <= kappa.

  Raises:
    DomainError: invalid d, radius or kappa.
  """
  d = _CheckDimension(d)
  if not (np.isfinite(kappa) and kappa > 0):
    raise DomainError('kappa must be finite and > 0, found %r.' % (kappa,))
  return _Map(lambda x: _WdScalar(d, x / kappa), r)


def ProfileWLimit(d, r, kappa):
  """ProfileWd also accepting the limit ratios kappa = 0 and kappa = inf."""

  d = _CheckDimension(d)
  if kappa == 0:
    return _Map(lambda x: 0.0 if x > 0 else WPlateau(d), r)
  if math.isinf(kappa):
    return _Map(lambda x: WPlateau(d), r)
  return ProfileWd(d, r, kappa)


def ClosedFormW2(r):
  """W_2 in closed form."""

  def _W2(x):
    if x <= 1.0:
      return 1.0 / (4.0 * math.pi)
    return (1.0 / (4.0 * math.pi) +
            math.sqrt(x * x - 1.0) / (2.0 * math.pi ** 2 * x * x) -
            math.acos(1.0 / x) / (2.0 * math.pi ** 2))

  return _Map(_W2, r)


def ClosedFormW3(r):
  """W_3 in closed form."""

  def _W3(x):
    if x <= 1.0:
      return 1.0 / (6.0 * math.pi ** 2)
    return (1.0 - (x * x - 1.0) ** 1.5 / x ** 3) / (6.0 * math.pi ** 2)

  return _Map(_W3, r)


def ProfileTailCheck(d):
  """(U_d(R) R, W_d(R) R^(d-1)) at R = TAIL_RADIUS."""
  d = _CheckDimension(d)
  radius = TAIL_RADIUS
  return TailValues(
      u_tail=ProfileUd(d, radius) * radius,
      w_tail=ProfileWd(d, radius) * radius ** (d - 1))


def ProfileTailLimits(d):
  """Analytic limits of ProfileTailCheck."""
  d = _CheckDimension(d)
  return TailValues(
      u_tail=1.0 / ((d - 1) * math.pi),
      w_tail=2.0 / (math.gamma(d) * math.pi * harmonic.SphereVolume(d)))


def ProfileTailExpansion(d, r):
  """Second-order tail predictions of U_d(r) r and W_d(r) r^(d-1)."""

  d = _CheckDimension(d)
  limits = ProfileTailLimits(d)
  inverse_sq = 1.0 / (r * r)
  vol = harmonic.SphereVolume(d)
  return TailValues(
      u_tail=limits.u_tail + inverse_sq / (2.0 * (d + 1) * math.pi),
      w_tail=limits.w_tail - inverse_sq / (math.gamma(d - 1) * (d + 1) *
                                           math.pi * vol))


def WeightedBesselSum(d, degree, r):
  """Sum_l dim(d,l) J_{l+(d-2)/2}(L r)^2 / dim(d, L), l = 0..L.

  Raises:
    DomainError: d < 3, L < 1 or r <= 0.
  """
  d = _CheckDimension(d, minimum=3)
  if int(degree) != degree or degree < 1:
    raise DomainError('L must be an integer >= 1, found %r.' % (degree,))
  if not r > 0:
    raise DomainError('r must be > 0, found %r.' % (r,))
  degree = int(degree)
  weights = np.array([harmonic.HarmDim(d, l) for l in range(degree + 1)],
                     dtype=float)
  orders = np.arange(degree + 1) + 0.5 * (d - 2)
  terms = weights * special.jv(orders, degree * r) ** 2
  return math.fsum(terms) / weights[-1]


def AppendixFunctionalA(d, count, r, func, at_infinity=0.0):
  """A_N(f) = sum_{l<N} (C_{l+1} - C_l)/C_N f(N r / l).

  The l = 0 term has argument +inf and uses `at_infinity`, the limit of f
  (0 for U).

  Args:
    d: int, dimension (>= 3).
    count: int, N >= 1.
    r: float, radius > 0.
    func: callable, bounded scalar function on (0, inf).
    at_infinity: float, limit of func at +inf.

  Returns:
    The weighted sum as a float.
  """
  d = _CheckDimension(d, minimum=3)
  if int(count) != count or count < 1:
    raise DomainError('N must be an integer >= 1, found %r.' % (count,))
  if not r > 0:
    raise DomainError('r must be > 0, found %r.' % (r,))
  count = int(count)
  total = harmonic.HarmDim(d, count)
  terms = [harmonic.HarmDimDifference(d, 0) / total * at_infinity]
  for l in range(1, count):
    weight = harmonic.HarmDimDifference(d, l) / total
    terms.append(weight * float(func(count * r / l)))
  return math.fsum(terms)


def AppendixFunctionalB(d, r, func):
  """B(f) = int_1^inf f(t r) (d-2) t^(1-d) dt by adaptive quadrature."""

  d = _CheckDimension(d, minimum=3)
  if not r > 0:
    raise DomainError('r must be > 0, found %r.' % (r,))

  def Integrand(t):
    return float(func(t * r)) * (d - 2) * t ** (1 - d)

  # Profiles change branch at argument 1, i.e. t = 1/r.
  split = max(1.0, 1.0 / r)
  head = 0.0
  if split > 1.0:
    head, _ = integrate.quad(Integrand, 1.0, split, epsabs=1e-12,
                             epsrel=1e-12, limit=200)
  tail, _ = integrate.quad(Integrand, split, np.inf, epsabs=1e-12,
                           epsrel=1e-12, limit=200)
  return head + tail


class ProfileFunction(object):
  """Evaluator for one dilated profile.

  Attributes:
    spec: ProfileSpec, dimension, kind and dilation.
  """

  def __init__(self, d, kind='W_d', kappa=1.0):
    if kind not in PROFILE_KINDS:
      raise DomainError('Unknown profile %r, expected one of %s.' %
                        (kind, PROFILE_KINDS))
    if not (np.isfinite(kappa) and kappa > 0):
      raise DomainError('kappa must be finite and > 0, found %r.' % (kappa,))
    self.spec = ProfileSpec(_CheckDimension(d), kind, float(kappa))

  def __call__(self, r):
    x = _CheckRadius(r) / self.spec.kappa
    if self.spec.kind == 'U':
      return ProfileU(x)
    if self.spec.kind == 'U_d':
      return ProfileUd(self.spec.d, x)
    return ProfileWd(self.spec.d, x)

  def __repr__(self):
    return 'ProfileFunction(d=%d, kind=%s, kappa=%r)' % self.spec
