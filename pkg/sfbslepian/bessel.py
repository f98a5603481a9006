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

"""Bessel functions of the first kind for real order v >= 0.

Values, derivatives and positive zeros of J_v, plus the band-limited radial
integral

  I_v(a, b; K) = int_0^K J_v(k a) J_v(k b) k dk

that every kernel, ball basis and concentration block is assembled from.

Evaluation is delegated to scipy.special (AMOS), this module adds the domain
checks, the zero finder and the Lommel closed forms. Functions accept scalars
or numpy arrays and broadcast, scalars in give floats out.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import math

from absl import logging
import numpy as np
from scipy import integrate
from scipy import optimize
from scipy import special

HALF_PI = 0.5 * math.pi

# Relative separation |a-b| <= COINCIDENCE_RTOL*max(a,b) at which the
# diagonal form, taken at the midpoint, replaces the two point integral.
COINCIDENCE_RTOL = 1e-12
# The cross Lommel form loses about -log10(K^2 |a-b| max(a,b)) digits. Below
# this value the integral is summed on Gauss-Legendre panels instead.
CROSS_SEPARATION = 1e-2
# Gauss-Legendre nodes per panel, one panel per period of J_v(ka) J_v(kb).
PANEL_NODES = 24
# Diagonal integrals with K*a below this are summed by quadrature, the closed
# form cancels to nothing for small arguments.
SMALL_ARGUMENT = 1.0
# Required agreement of a refined zero with its characteristic equation.
ZERO_RESIDUAL = 1e-10
# v^(1/3) J_v(v) and v^(2/3) J_v'(v) increase to these limits.
WATSON_VALUE_CONSTANT = (
    special.gamma(1.0 / 3.0) / (2.0 ** (2.0 / 3.0) * 3.0 ** (1.0 / 6.0) *
                                math.pi))
WATSON_SLOPE_CONSTANT = (
    3.0 ** (1.0 / 6.0) * special.gamma(2.0 / 3.0) / (2.0 ** (1.0 / 3.0) *
                                                     math.pi))
# max_t |J_v(t)| ~ BESSEL_PEAK_CONSTANT * v^(-1/3) for large v.
BESSEL_PEAK_CONSTANT = 0.674885


class Error(Exception):
  """Base class for errors."""


class DomainError(Error, ValueError):
  """Argument outside the domain of the function."""


class ConvergenceError(Error, ArithmeticError):
  """Root refinement did not converge."""


# Ordered positive zeros of J_order.
ZeroList = collections.namedtuple('ZeroList', ['order', 'zeros'])

# Values behind the phase-delay bounds at t = v.
WatsonBounds = collections.namedtuple(
    'WatsonBounds', ['value', 'value_bound', 'slope', 'slope_bound'])


def _Scalarize(result, *inputs):
  """Returns a float when every input was a scalar."""
  if all(np.ndim(x) == 0 for x in inputs):
    return float(result)
  return result


def CheckOrder(order):
  """Raises DomainError unless every order is finite and non-negative."""

  v = np.asarray(order, dtype=float)
  if not np.all(np.isfinite(v)):
    raise DomainError('Bessel order must be finite, found %r.' % (order,))
  if np.any(v < 0):
    raise DomainError('Bessel order must be >= 0, found %r.' % (order,))
  return v


def _CheckArgument(value, name='t', positive=False):
  x = np.asarray(value, dtype=float)
  if not np.all(np.isfinite(x)):
    raise DomainError('%s must be finite, found %r.' % (name, value))
  if positive and np.any(x <= 0):
    raise DomainError('%s must be > 0, found %r.' % (name, value))
  if np.any(x < 0):
    raise DomainError('%s must be >= 0, found %r.' % (name, value))
  return x


def BesselJ(order, t):
  """J_v(t) for v >= 0 and t >= 0.

  Args:
    order: float or array, Bessel order v.
    t: float or array, non-negative argument.

  Returns:
    J_v(t), broadcast over the inputs.

  Raises:
    DomainError: negative or non-finite inputs.
  """
  v = CheckOrder(order)
  x = _CheckArgument(t)
  return _Scalarize(special.jv(v, x), order, t)


def BesselJPrime(order, t):
  """J_v'(t) = (J_{v-1}(t) - J_{v+1}(t))/2.

  t = 0 is only accepted for v = 0 (slope 0) and v = 1 (slope 1/2).

  Raises:
    DomainError: negative inputs, or t = 0 with v not in {0, 1}.
  """
  v = CheckOrder(order)
  x = _CheckArgument(t)
  v, x = np.broadcast_arrays(v, x)
  at_origin = x == 0
  if np.any(at_origin & (v != 0) & (v != 1)):
    raise DomainError(
        'J_v\'(0) is only defined here for v in {0, 1}, found v=%r.' % (order,))
  return _Scalarize(special.jvp(v, x), order, t)


def McMahonZero(order, index):
  """McMahon large-zero expansion of j_{v,index}, used as a search bound."""

  mu = 4.0 * order * order
  beta = (index + 0.5 * order - 0.25) * math.pi
  eight_beta = 8.0 * beta
  return (beta - (mu - 1.0) / eight_beta -
          4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * eight_beta ** 3))


def BracketRoots(func, lower, upper, step=HALF_PI, xtol=1e-14):
  """Finds the roots of a scalar function on [lower, upper].

  The interval is scanned at the given step and every sign change is refined
  with Brent's method. The step must be below half the root spacing, which
  for Bessel-type functions (spacing >= pi - o(1)) is met by pi/2.

  Args:
    func: callable accepting a numpy array, the function to find roots of.
    lower: float, start of the scan.
    upper: float, end of the scan (inclusive).
    step: float, scan spacing.
    xtol: float, absolute tolerance of the refined roots.

  Returns:
    Ascending list of roots.

  Raises:
    ConvergenceError: Brent's method failed on a bracket.
  """
  if upper <= lower:
    return []
  count = int(math.ceil((upper - lower) / step))
  grid = lower + step * np.arange(count + 1, dtype=float)
  grid[-1] = upper
  values = np.asarray(func(grid), dtype=float)
  roots = []
  for i in range(len(grid)):
    if values[i] == 0:
      roots.append(float(grid[i]))
      continue
    if i + 1 < len(grid) and values[i] * values[i + 1] < 0:
      try:
        root = optimize.brentq(
            lambda x: float(func(np.asarray(x))), grid[i], grid[i + 1],
            xtol=xtol, rtol=4 * np.finfo(float).eps, maxiter=200)
      except (RuntimeError, ValueError) as error_message:
        logging.error('Root refinement failed on [%s, %s].',
                      grid[i], grid[i + 1])
        raise ConvergenceError('Root refinement failed on [%s, %s]: %s' %
                               (grid[i], grid[i + 1], error_message))
      roots.append(float(root))
  return roots


def BesselZeros(order, count):
  """First `count` positive zeros of J_v.

  Args:
    order: float, Bessel order v >= 0.
    count: int, number of zeros wanted (>= 1).

  Returns:
    ZeroList with strictly increasing zeros, all larger than v.

  Raises:
    DomainError: invalid order or count.
  """
  CheckOrder(order)
  if np.ndim(order) != 0:
    raise DomainError('BesselZeros expects a scalar order.')
  if int(count) != count or count < 1:
    raise DomainError('count must be a positive integer, found %r.' % (count,))
  v = float(order)
  count = int(count)
  # J_v is positive on (0, j_{v,1}) and j_{v,1} > v.
  lower = 0.9 * v
  upper = max(McMahonZero(v, count), v) + 2.0 * math.pi
  zeros = []
  while True:
    zeros = BracketRoots(lambda x: special.jv(v, x), lower, upper)
    if len(zeros) >= count:
      break
    logging.debug('Extending zero search for order %s beyond %s.', v, upper)
    upper += (count - len(zeros) + 1) * math.pi
  zeros = zeros[:count]
  for zero in zeros:
    if abs(special.jv(v, zero)) > ZERO_RESIDUAL:
      raise ConvergenceError('Zero %r of J_%s has residual %r.' %
                             (zero, v, special.jv(v, zero)))
  return ZeroList(order=v, zeros=zeros)


def _DiagonalByQuadrature(order, argument):
  """int_0^x t J_v(t)^2 dt by adaptive quadrature (small x)."""
  value, _ = integrate.quad(lambda s: s * special.jv(order, s) ** 2,
                            0.0, argument, epsabs=0.0, epsrel=1e-13,
                            limit=100)
  return value


def DiagonalRadialIntegral(order, a, bandlimit):
  """I_v(a, a; K) = (K^2/2) [J_v'(aK)^2 + (1 - v^2/(aK)^2) J_v(aK)^2]."""

  v, a = np.broadcast_arrays(np.asarray(order, dtype=float),
                             np.asarray(a, dtype=float))
  shape = v.shape
  v = v.ravel()
  a = a.ravel()
  x = a * bandlimit
  with np.errstate(divide='ignore', invalid='ignore'):
    closed = 0.5 * bandlimit * bandlimit * (
        special.jvp(v, x) ** 2 + (1.0 - (v / x) ** 2) * special.jv(v, x) ** 2)
  result = np.array(closed, dtype=float)
  for i in np.flatnonzero(x < SMALL_ARGUMENT):
    result[i] = _DiagonalByQuadrature(v[i], x[i]) / (a[i] * a[i])
  return result.reshape(shape)


def _LommelCross(v, a, b, bandlimit):
  xa = a * bandlimit
  xb = b * bandlimit
  with np.errstate(divide='ignore', invalid='ignore'):
    return bandlimit * (a * special.jvp(v, xa) * special.jv(v, xb) -
                        b * special.jv(v, xa) * special.jvp(v, xb)) / (
                            b * b - a * a)


def _PanelIntegral(order, a, b, bandlimit):
  """int_0^K J_v(ka) J_v(kb) k dk on Gauss-Legendre panels."""
  panels = int(math.ceil(bandlimit * (a + b) / (2.0 * math.pi))) + 1
  edges = np.linspace(0.0, bandlimit, panels + 1)
  half = 0.5 * np.diff(edges)[:, np.newaxis]
  middle = 0.5 * (edges[1:] + edges[:-1])[:, np.newaxis]
  nodes, weights = np.polynomial.legendre.leggauss(PANEL_NODES)
  k = (middle + half * nodes).ravel()
  w = (half * weights).ravel()
  return math.fsum(
      w * k * special.jv(order, k * a) * special.jv(order, k * b))


def BandlimitedRadialIntegral(order, a, b, bandlimit):
  """Band-limited radial integral int_0^K J_v(ka) J_v(kb) k dk.

  Lommel's closed form

    K [a J_v'(aK) J_v(bK) - b J_v(aK) J_v'(bK)] / (b^2 - a^2)

  is used when a and b are apart. Its numerator cancels as b -> a, so for
  K^2 |a - b| max(a, b) <= CROSS_SEPARATION the integral is summed on
  Gauss-Legendre panels, and for |a - b| <= COINCIDENCE_RTOL * max(a, b)
  the diagonal form is taken at the midpoint.

  Args:
    order: float or array, v >= 0.
    a: float or array, positive radius.
    b: float or array, positive radius.
    bandlimit: float, Bessel bandwidth K > 0.

  Returns:
    The integral, broadcast over order, a and b.

  Raises:
    DomainError: non-positive radii or bandwidth.
  """
  v = CheckOrder(order)
  a_arr = _CheckArgument(a, name='a', positive=True)
  b_arr = _CheckArgument(b, name='b', positive=True)
  if not (np.isfinite(bandlimit) and bandlimit > 0):
    raise DomainError('K must be > 0, found %r.' % (bandlimit,))
  v, a_arr, b_arr = np.broadcast_arrays(v, a_arr, b_arr)
  shape = v.shape
  v, a_arr, b_arr = v.ravel(), a_arr.ravel(), b_arr.ravel()
  k = float(bandlimit)

  separation = np.abs(a_arr - b_arr)
  coincide = separation <= COINCIDENCE_RTOL * np.maximum(a_arr, b_arr)
  near = ~coincide & (
      k * k * separation * np.maximum(a_arr, b_arr) <= CROSS_SEPARATION)
  result = np.array(_LommelCross(v, a_arr, b_arr, k), dtype=float)
  for i in np.flatnonzero(near):
    result[i] = _PanelIntegral(v[i], a_arr[i], b_arr[i], k)
  if np.any(coincide):
    middle = 0.5 * (a_arr[coincide] + b_arr[coincide])
    result[coincide] = DiagonalRadialIntegral(v[coincide], middle, k)
  return _Scalarize(result.reshape(shape), order, a, b)


def BesselSumSquares(v0, degree, x):
  """Sum_{l=0}^{L} J_{v0+l}(x)^2, bounded by 1.

  Args:
    v0: float, starting order.
    degree: int, L >= 0.
    x: float, argument >= 0.

  Returns:
    The compensated sum, clipped to [0, 1] against rounding.
  """
  CheckOrder(v0)
  _CheckArgument(x, name='x')
  if int(degree) != degree or degree < 0:
    raise DomainError('L must be a non-negative integer, found %r.' % (degree,))
  orders = float(v0) + np.arange(int(degree) + 1, dtype=float)
  terms = special.jv(orders, float(x)) ** 2
  return min(1.0, math.fsum(terms))


def OscillatoryQuad(func, lower, upper, panel=16.0):
  """Integrates an oscillating function panel by panel.

  Each panel of the given width is handled by scipy's adaptive quadrature and
  the panel results are summed with math.fsum.
  """
  if upper <= lower:
    return 0.0
  edges = np.append(np.arange(lower, upper, panel), upper)
  pieces = []
  for left, right in zip(edges[:-1], edges[1:]):
    if right <= left:
      continue
    value, _ = integrate.quad(func, left, right, epsabs=1e-14, epsrel=1e-12,
                              limit=200)
    pieces.append(value)
  return math.fsum(pieces)


def OrthogonalityIntegral(order, a, b, upper):
  """int_0^T J_v(at) J_v(bt)/t dt by quadrature."""

  CheckOrder(order)
  def Integrand(t):
    if t == 0:
      return 0.0
    return special.jv(order, a * t) * special.jv(order, b * t) / t
  return OscillatoryQuad(Integrand, 0.0, float(upper))


def OrthogonalityClosedForm(order, a, b):
  """int_0^inf J_v(at) J_v(bt)/t dt = (1/2v)(min(a,b)/max(a,b))^v, v > 0."""

  if order <= 0:
    raise DomainError('Orthogonality integral needs v > 0, found %r.' % order)
  return (min(a, b) / max(a, b)) ** order / (2.0 * order)


def SumSquaresIdentity(v0, degree, x, upper=5000.0):
  """Integrated recurrence form of BesselSumSquares.

  Returns
    J_{v0}(x)^2/2 + J_{v0+L}(x)^2/2
      - v0 int_x^inf J_{v0}(t)^2/t dt + (v0+L) int_x^inf J_{v0+L}(t)^2/t dt,
  with each tail integral taken by quadrature to `upper` and completed by the
  mean tail 1/(pi*upper) of J_v(t)^2/t beyond it.
  """
  v_top = float(v0) + degree
  tail = 1.0 / (math.pi * upper)

  def Tail(order):
    body = OscillatoryQuad(lambda t: special.jv(order, t) ** 2 / t,
                           float(x), float(upper))
    return body + tail

  terms = [0.5 * special.jv(v0, x) ** 2, 0.5 * special.jv(v_top, x) ** 2,
           v_top * Tail(v_top)]
  if v0:
    terms.append(-float(v0) * Tail(float(v0)))
  return math.fsum(terms)


def WatsonBoundsAt(order):
  """J_v(v), J_v'(v) and their bounds c v^(-1/3), c' v^(-2/3)."""

  if order <= 0:
    raise DomainError('Watson bounds need v > 0, found %r.' % order)
  return WatsonBounds(
      value=float(special.jv(order, order)),
      value_bound=WATSON_VALUE_CONSTANT * order ** (-1.0 / 3.0),
      slope=float(special.jvp(order, order)),
      slope_bound=WATSON_SLOPE_CONSTANT * order ** (-2.0 / 3.0))
