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

"""Spatiospectral concentration on rotationally symmetric domains.

The operator S_D B_{L,K} S_D (restrict to D, project on the band-limited
space, restrict again) commutes with rotations when D is a ball or a shell
a <= |x| <= b. It then splits into one radial integral operator per degree l,
each repeated dim(d, l) times, with kernel

  (r s)^((d-1)/2) (r s)^((2-d)/2) I_{nu_l}(r, s; K)     on [a, b]^2.

Each radial operator is discretized on Gauss-Legendre nodes (Nystrom) into a
symmetric matrix and handed to a dense eigensolver. Blocks are independent and
are solved on a thread pool, results come back in degree order.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
from concurrent import futures
import math
import time

from absl import logging
import numpy as np
from scipy import integrate
from scipy import linalg
from sfbslepian import bessel
from sfbslepian import block_response
from sfbslepian import harmonic
from sfbslepian import kernel
from sfbslepian import profiles

DomainError = bessel.DomainError

# Raw eigenvalues outside [-EIGEN_SLACK, 1 + EIGEN_SLACK] are flagged.
EIGEN_SLACK = 1e-8
# Blocks whose trace falls below this multiple of K^d are dropped.
TRACE_CUTOFF = 1e-14
MIN_NODES = 64

DegreeBlock = collections.namedtuple(
    'DegreeBlock', ['l', 'multiplicity', 'eigenvalues'])

MergedEigenvalue = collections.namedtuple(
    'MergedEigenvalue', ['value', 'multiplicity', 'degree'])

BimodalCounts = collections.namedtuple(
    'BimodalCounts',
    ['epsilon', 'high', 'mid', 'low', 'high_density', 'mid_density'])

ShannonResult = collections.namedtuple(
    'ShannonResult', ['measured', 'predicted', 'ratio', 'hs_norm_sq'])


class Error(Exception):
  """Base class for errors."""


class EigenSolverError(Error, ArithmeticError):
  """Dense eigensolver failed on a block."""


class QuadratureError(Error, ArithmeticError):
  """Quadrature rule failed its exactness check."""


class RadialDomain(collections.namedtuple('RadialDomain', ['inner', 'outer'])):
  """Ball (inner = 0) or shell inner <= |x| <= outer."""

  __slots__ = ()

  def __new__(cls, inner, outer):
    if not (np.isfinite(inner) and np.isfinite(outer)):
      raise DomainError('Domain radii must be finite.')
    if not 0 <= inner < outer:
      raise DomainError('Need 0 <= inner < outer, found [%r, %r].' %
                        (inner, outer))
    return super(RadialDomain, cls).__new__(cls, float(inner), float(outer))

  @property
  def is_ball(self):
    return self.inner == 0

  @property
  def width(self):
    return self.outer - self.inner

  def Volume(self, d):
    return harmonic.BallVolume(d) * (self.outer ** d - self.inner ** d)


class RadialQuadrature(object):
  """Gauss-Legendre rule on [inner, outer].

  Attributes:
    domain: RadialDomain.
    nodes: numpy array, nodes inside the domain, ascending.
    weights: numpy array, positive weights.
  """

  def __init__(self, domain, nodes, weights):
    self.domain = domain
    self.nodes = nodes
    self.weights = weights

  @classmethod
  def GaussLegendre(cls, domain, count):
    if int(count) != count or count < 2:
      raise DomainError('Need at least 2 quadrature nodes, found %r.' % count)
    x, w = np.polynomial.legendre.leggauss(int(count))
    half = 0.5 * domain.width
    return cls(domain, domain.inner + half * (x + 1.0), half * w)

  def __len__(self):
    return len(self.nodes)

  def Integrate(self, values):
    return math.fsum(self.weights * values)

  def Validate(self, tolerance=1e-12):
    """Checks exactness on the monomials of degree < 2n.

    Monomials are taken in the centred variable (r - c)/h so every check is
    well conditioned.

    Returns:
      Largest absolute error.

    Raises:
      QuadratureError: an error exceeds the tolerance.
    """
    half = 0.5 * self.domain.width
    centre = self.domain.inner + half
    x = (self.nodes - centre) / half
    worst = 0.0
    for degree in range(2 * len(self)):
      exact = 0.0 if degree % 2 else 2.0 * half / (degree + 1)
      error = abs(self.Integrate(x ** degree) - exact)
      worst = max(worst, error)
    if worst > tolerance:
      raise QuadratureError('Quadrature error %r exceeds %r.' %
                            (worst, tolerance))
    return worst


def NodeCount(bandlimit, domain):
  """max(64, ceil(1.5 K (b - a)/pi) + 16), about three nodes per half period."""
  return max(MIN_NODES,
             int(math.ceil(1.5 * bandlimit * domain.width / math.pi)) + 16)


def _Order(d, l):
  return l + 0.5 * (d - 2)


def BlockMatrix(d, l, bandlimit, domain, count, quadrature=None):
  """Nystrom matrix of the degree-l radial operator.

  Args:
    d: int, dimension.
    l: int, degree.
    bandlimit: float, K.
    domain: RadialDomain.
    count: int, number of nodes (>= 2).
    quadrature: optional RadialQuadrature to reuse, must have `count` nodes.

  Returns:
    Symmetric (count x count) numpy array
    sqrt(w_i w_j) sqrt(r_i r_j) I_nu(r_i, r_j; K).
  """
  if quadrature is None:
    quadrature = RadialQuadrature.GaussLegendre(domain, count)
  r = quadrature.nodes
  scale = np.sqrt(quadrature.weights * r)
  integrals = bessel.BandlimitedRadialIntegral(
      _Order(d, l), r[:, None], r[None, :], bandlimit)
  matrix = scale[:, None] * integrals * scale[None, :]
  return 0.5 * (matrix + matrix.T)


def BlockTraces(bl, quadrature):
  """Traces of every block l = 0..L, sum_i w_i r_i I_nu(r_i, r_i; K)."""

  r = quadrature.nodes
  diagonal = bessel.DiagonalRadialIntegral(bl.orders[:, None], r[None, :],
                                           bl.K)
  return np.dot(diagonal, quadrature.weights * r)


def _ActiveDegrees(bl, quadrature):
  traces = BlockTraces(bl, quadrature)
  cutoff = TRACE_CUTOFF * bl.K ** bl.d
  for l, trace in enumerate(traces):
    if trace < cutoff:
      logging.warning('Truncated blocks l >= %d (trace %s below %s).',
                      l, trace, cutoff)
      return list(range(l))
  return list(range(bl.L + 1))


def _SolveBlock(bl, l, quadrature):
  matrix = BlockMatrix(bl.d, l, bl.K, quadrature.domain, len(quadrature),
                       quadrature=quadrature)
  try:
    values = linalg.eigh(matrix, eigvals_only=True)
  except (linalg.LinAlgError, ValueError) as error_message:
    logging.error('Eigensolver failed on block l=%d.', l)
    raise EigenSolverError('Eigensolver failed on block l=%d: %s' %
                           (l, error_message))
  logging.debug('Block l=%d solved, top eigenvalue %s.', l, values[-1])
  return DegreeBlock(l, harmonic.HarmDim(bl.d, l), values[::-1].copy())


class Spectrum(object):
  """Eigenvalues of the concentration operator, block by block.

  Attributes:
    bandlimit: kernel.Bandlimit.
    domain: RadialDomain.
    nodes: int, quadrature nodes per block.
    blocks: list of DegreeBlock in degree order, eigenvalues descending.
  """

  def __init__(self, bandlimit, domain, nodes, blocks):
    self.bandlimit = bandlimit
    self.domain = domain
    self.nodes = nodes
    self.blocks = blocks

  def Merged(self):
    """All eigenvalues, descending, ties kept in degree order."""
    entries = []
    for block in self.blocks:
      for value in block.eigenvalues:
        entries.append(MergedEigenvalue(float(value), block.multiplicity,
                                        block.l))
    # sorted() is stable.
    return sorted(entries, key=lambda entry: -entry.value)

  def Expanded(self, clamp=True):
    """Eigenvalues repeated by multiplicity, descending."""
    if not self.blocks:
      return np.zeros(0)
    values = np.concatenate([np.repeat(block.eigenvalues, block.multiplicity)
                             for block in self.blocks])
    if clamp:
      values = np.clip(values, 0.0, 1.0)
    return np.sort(values)[::-1]

  def _Reduce(self, func):
    return math.fsum(block.multiplicity * math.fsum(func(block.eigenvalues))
                     for block in self.blocks)

  def Trace(self):
    return self._Reduce(lambda values: values)

  def HsNormSq(self):
    return self._Reduce(lambda values: values * values)

  def DeltaK(self):
    """sum (lambda - lambda^2), on clamped values."""
    return self._Reduce(lambda values: np.clip(values, 0, 1) -
                        np.clip(values, 0, 1) ** 2)

  def Count(self):
    return sum(block.multiplicity * len(block.eigenvalues)
               for block in self.blocks)

  def Flagged(self):
    """Raw eigenvalues (with multiplicity) outside the tolerated range."""
    return sum(block.multiplicity *
               int(np.sum((block.eigenvalues < -EIGEN_SLACK) |
                          (block.eigenvalues > 1 + EIGEN_SLACK)))
               for block in self.blocks)

  def Summary(self):
    return {'trace': self.Trace(),
            'hs_norm_sq': self.HsNormSq(),
            'delta_k': self.DeltaK(),
            'count': self.Count(),
            'flagged': self.Flagged()}


def ComputeSpectrum(bl, domain, nodes=None, threads=None, progress=False):
  """Spectrum of the concentration operator for a ball or shell.

  Args:
    bl: kernel.Bandlimit.
    domain: RadialDomain.
    nodes: int, nodes per block, None for NodeCount.
    threads: int, worker threads, None for the executor default.
    progress: bool, show a progress bar over blocks.

  Returns:
    Spectrum.

  Raises:
    EigenSolverError: a block failed, the message names its degree.
  """
  count = nodes or NodeCount(bl.K, domain)
  quadrature = RadialQuadrature.GaussLegendre(domain, count)
  degrees = _ActiveDegrees(bl, quadrature)
  start = time.time()

  response = block_response.BlockResponse()
  for l in degrees:
    response.SetBlock(l)
  if progress:
    response.StartIndicator()

  def _Drain():
    while True:
      item = response.GetBlock()
      if item is None:
        return
      blocks.append(item[1])

  blocks = []
  with futures.ThreadPoolExecutor(max_workers=threads) as pool:
    pending = {pool.submit(_SolveBlock, bl, l, quadrature): l for l in degrees}
    for future in futures.as_completed(pending):
      response.AddResult(pending[future], future.result())
      _Drain()
  _Drain()
  if not response.done.is_set():
    raise EigenSolverError('%d blocks never returned.' % response.Pending())

  spectrum = Spectrum(bl, domain, count, blocks)
  flagged = spectrum.Flagged()
  if flagged:
    logging.warning('%d eigenvalues outside [%s, 1+%s].', flagged,
                    -EIGEN_SLACK, EIGEN_SLACK)
  logging.info('Spectrum d=%d L=%d K=%s on [%s, %s]: %d blocks, %d nodes, '
               '%.2fs.', bl.d, bl.L, bl.K, domain.inner, domain.outer,
               len(blocks), count, time.time() - start)
  return spectrum


def KernelDiagIntegral(bl, domain, nodes=None):
  """int_D K(x, x) dx on the Nystrom nodes, through the kernel module."""

  count = nodes or NodeCount(bl.K, domain)
  quadrature = RadialQuadrature.GaussLegendre(domain, count)
  vol = harmonic.SphereVolume(bl.d)
  values = np.array([kernel.KernelDiag(bl, r) * vol * r ** (bl.d - 1)
                     for r in quadrature.nodes])
  return quadrature.Integrate(values)


def PlateauPrediction(d, kappa, domain):
  """int_D W_d(|x|/kappa) dx.

  The plateau part r <= kappa is integrated exactly, the rest by adaptive
  quadrature.
  """
  if kappa == 0:
    return 0.0
  vol = harmonic.SphereVolume(d)
  if math.isinf(kappa):
    return profiles.WPlateau(d) * domain.Volume(d)
  edge = min(max(kappa, domain.inner), domain.outer)
  total = profiles.WPlateau(d) * vol * (edge ** d - domain.inner ** d) / d
  if edge < domain.outer:
    tail, _ = integrate.quad(
        lambda r: profiles.ProfileWd(d, r, kappa) * vol * r ** (d - 1),
        edge, domain.outer, epsabs=1e-12, epsrel=1e-11, limit=200)
    total += tail
  return total


def ShannonNumber(bl, domain, nodes=None, threads=None, spectrum=None):
  """Measured trace against K^d int_D W_d(|x|/kappa) dx."""

  if spectrum is None:
    spectrum = ComputeSpectrum(bl, domain, nodes=nodes, threads=threads)
  measured = spectrum.Trace()
  predicted = bl.K ** bl.d * PlateauPrediction(bl.d, bl.kappa, domain)
  ratio = measured / predicted if predicted else float('nan')
  return ShannonResult(measured, predicted, ratio, spectrum.HsNormSq())


def HsNormSq(spectrum):
  """Squared Hilbert-Schmidt norm, sum of multiplicity * lambda^2."""
  return spectrum.HsNormSq()


def CountAtLeast(spectrum, threshold):
  """Clamped eigenvalues >= threshold, with multiplicity."""
  return sum(block.multiplicity *
             int(np.sum(np.clip(block.eigenvalues, 0, 1) >= threshold))
             for block in spectrum.blocks)


def CountBetween(spectrum, low, high):
  """Clamped eigenvalues strictly inside (low, high), with multiplicity."""
  total = 0
  for block in spectrum.blocks:
    values = np.clip(block.eigenvalues, 0, 1)
    total += block.multiplicity * int(np.sum((values > low) & (values < high)))
  return total


def Bimodal(spectrum, epsilon):
  """High, mid and low eigenvalue counts for a margin epsilon in (0, 1/2).

  Raises:
    DomainError: epsilon outside (0, 1/2).
  """
  if not 0 < epsilon < 0.5:
    raise DomainError('epsilon must lie in (0, 1/2), found %r.' % (epsilon,))
  high = CountAtLeast(spectrum, 1.0 - epsilon)
  mid = CountBetween(spectrum, epsilon, 1.0 - epsilon)
  low = spectrum.Count() - high - mid
  scale = spectrum.bandlimit.K ** spectrum.bandlimit.d
  return BimodalCounts(epsilon, high, mid, low, high / scale, mid / scale)


def LoewnerDominates(low, high, slack=1e-9):
  """True when each ordered eigenvalue of `high` is >= `low` minus slack."""

  low_values = low.Expanded(clamp=False)
  high_values = high.Expanded(clamp=False)
  size = max(len(low_values), len(high_values))
  low_values = np.sort(np.pad(low_values, (0, size - len(low_values))))[::-1]
  high_values = np.sort(np.pad(high_values, (0, size - len(high_values))))[::-1]
  return bool(np.all(high_values >= low_values - slack))
