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

"""SFB orthonormal bases on the closed unit ball.

Radial profiles r^((2-d)/2) J_nu(k r), nu = l + (d-2)/2, discretized by a
boundary condition on the unit sphere:

  dirichlet   J_nu(k) = 0
  neumann     l J_nu(k) - k J_{nu+1}(k) = 0, plus the constant mode k = 0
              at l = 0.

Each mode carries the constant C making C^2 int_0^1 J_nu(k r)^2 r dr = 1.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import math

from absl import logging
import numpy as np
from scipy import special
from sfbslepian import bessel
from sfbslepian import harmonic

DomainError = bessel.DomainError
ConvergenceError = bessel.ConvergenceError

DIRICHLET = 'dirichlet'
NEUMANN = 'neumann'
BOUNDARY_CONDITIONS = (DIRICHLET, NEUMANN)

# Accepted residual of a wavenumber passed in by a caller.
CHARACTERISTIC_TOLERANCE = 1e-9

BallMode = collections.namedtuple('BallMode', ['d', 'l', 'k', 'norm_const',
                                               'bc'])


def _Order(d, l):
  return l + 0.5 * (d - 2)


def _CheckBoundary(bc):
  if bc not in BOUNDARY_CONDITIONS:
    raise DomainError('Boundary condition must be one of %s, found %r.' %
                      (BOUNDARY_CONDITIONS, bc))


def Characteristic(d, l, k, bc):
  """Characteristic function whose positive roots are the wavenumbers."""
  nu = _Order(d, l)
  if bc == DIRICHLET:
    return special.jv(nu, k)
  return l * special.jv(nu, k) - k * special.jv(nu + 1, k)


def _ScanStart(d, l, bc):
  # No root lies below nu (dirichlet) or below sqrt(l(l+d-2)) >= l (neumann).
  nu = _Order(d, l)
  if bc == DIRICHLET:
    return 0.9 * nu
  if l == 0:
    return nu + 1.0
  return 0.9 * l


def _Wavenumbers(d, l, bandlimit, bc):
  if int(d) != d or d < 2 or int(l) != l or l < 0:
    raise DomainError('Need integer d >= 2 and l >= 0, found %r, %r.' % (d, l))
  if not (np.isfinite(bandlimit) and bandlimit > 0):
    raise DomainError('K must be finite and > 0, found %r.' % (bandlimit,))
  roots = bessel.BracketRoots(lambda k: Characteristic(d, l, k, bc),
                              _ScanStart(d, l, bc), float(bandlimit))
  for k in roots:
    residual = abs(Characteristic(d, l, k, bc))
    if residual > bessel.ZERO_RESIDUAL * max(1.0, k):
      logging.error('Wavenumber %s for d=%d, l=%d has residual %s.',
                    k, d, l, residual)
      raise ConvergenceError('Wavenumber %r (d=%d, l=%d, %s) not converged.' %
                             (k, d, l, bc))
  modes = [BallMode(d, l, k, RadialNormConstant(d, l, k, bc), bc)
           for k in roots if k > 0]
  if bc == NEUMANN and l == 0:
    modes.insert(0, BallMode(d, 0, 0.0, RadialNormConstant(d, 0, 0.0, bc), bc))
  return modes


def DirichletWavenumbers(d, l, bandlimit):
  """Dirichlet modes of degree l with wavenumber <= K, ascending."""
  return _Wavenumbers(d, l, bandlimit, DIRICHLET)


def NeumannWavenumbers(d, l, bandlimit):
  """Neumann modes of degree l with wavenumber <= K, ascending.

  At l = 0 the constant mode (k = 0) comes first.
  """
  return _Wavenumbers(d, l, bandlimit, NEUMANN)


def RadialNormConstant(d, l, k, bc):
  """Normalization C of the radial profile of one mode.

  Args:
    d: int, dimension.
    l: int, degree.
    k: float, wavenumber satisfying the boundary condition (0 for the
      constant neumann mode).
    bc: str, 'dirichlet' or 'neumann'.

  Returns:
    C > 0. For the constant mode, 1/sqrt(vol(B^d)).

  Raises:
    DomainError: k does not satisfy the boundary condition.
  """
  _CheckBoundary(bc)
  if k == 0:
    if bc != NEUMANN or l != 0:
      raise DomainError('k = 0 is only a mode for neumann at l = 0.')
    return 1.0 / math.sqrt(harmonic.BallVolume(d))
  if not (np.isfinite(k) and k > 0):
    raise DomainError('Wavenumber must be finite and >= 0, found %r.' % (k,))
  residual = abs(Characteristic(d, l, k, bc))
  if residual > CHARACTERISTIC_TOLERANCE * max(1.0, k):
    raise DomainError('k=%r does not satisfy the %s condition (residual %r).' %
                      (k, bc, residual))
  nu = _Order(d, l)
  if bc == DIRICHLET:
    return math.sqrt(2.0) / abs(special.jv(nu + 1, k))
  # int_0^1 J_nu(k r)^2 r dr = I_nu(1, 1; k) / k^2.
  integral = bessel.BandlimitedRadialIntegral(nu, 1.0, 1.0, k) / (k * k)
  return 1.0 / math.sqrt(integral)


class BallBasis(object):
  """All modes with l <= L and k <= K for one boundary condition.

  Attributes:
    d: int, dimension.
    L: int, degree cap.
    K: float, wavenumber cap.
    bc: str, boundary condition.
    modes: dict mapping degree l to its list of BallMode.
  """

  def __init__(self, d, L, K, bc):  # pylint: disable=invalid-name
    _CheckBoundary(bc)
    if int(L) != L or L < 0:
      raise DomainError('L must be a non-negative integer, found %r.' % (L,))
    self.d = int(d)
    self.L = int(L)   # pylint: disable=invalid-name
    self.K = float(K)  # pylint: disable=invalid-name
    self.bc = bc
    self.modes = {}
    for l in range(self.L + 1):
      self.modes[l] = _Wavenumbers(self.d, l, self.K, bc)
    logging.info('Ball basis d=%d L=%d K=%s %s: %d radial modes.',
                 self.d, self.L, self.K, bc, self.ModeCount())

  def ModeCount(self):
    """Number of radial modes, without angular multiplicity."""
    return sum(len(modes) for modes in self.modes.values())

  def Dimension(self):
    """Dimension of the band-limited space on the ball."""
    return sum(harmonic.HarmDim(self.d, l) * len(modes)
               for l, modes in self.modes.items())

  def Diag(self, r):
    """Kernel diagonal at radius r in [0, 1], scalar or array."""

    x = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(x)) or np.any(x < 0) or np.any(x > 1):
      raise DomainError('Ball radius must lie in [0, 1], found %r.' % (r,))
    flat = x.ravel()
    total = np.zeros_like(flat)
    vol = harmonic.SphereVolume(self.d)
    at_origin = flat == 0
    inside = ~at_origin
    for l, modes in self.modes.items():
      if not modes:
        continue
      nu = _Order(self.d, l)
      weight = harmonic.HarmDim(self.d, l) / vol
      for mode in modes:
        if mode.k == 0:
          # Constant mode already holds its angular factor.
          total += mode.norm_const ** 2
          continue
        c_sq = mode.norm_const ** 2
        total[inside] += (weight * c_sq * flat[inside] ** (2 - self.d) *
                          special.jv(nu, mode.k * flat[inside]) ** 2)
        if l == 0 and np.any(at_origin):
          # r^(2-d) J_nu(kr)^2 -> (k/2)^(2 nu) / Gamma(nu+1)^2.
          total[at_origin] += (weight * c_sq * (0.5 * mode.k) ** (2 * nu) /
                               math.gamma(nu + 1) ** 2)
    if x.ndim == 0:
      return float(total[0])
    return total.reshape(x.shape)


def BallKernelDiag(d, L, K, r, bc):  # pylint: disable=invalid-name
  """Diagonal of the ball reproducing kernel at radius r.

  Raises:
    DomainError: r outside [0, 1] or unknown boundary condition.
  """
  return BallBasis(d, L, K, bc).Diag(r)
