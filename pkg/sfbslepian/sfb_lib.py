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

"""sfbslepian - band-limited kernels and concentration spectra from the shell.

The first positional argument names the subcommand, everything else is a
flag. One invocation writes one table (csv or tbl) or one json document to
--out, '-' being standard output.

  profile      U, U_d and W_d over a radius grid.
  kernel-diag  K^-d K(x, x) against W_d(|x|/kappa), one block per K.
  ball-diag    Same for the Dirichlet or Neumann basis of the unit ball.
  spectrum     Concentration spectrum on a ball or shell, with its summary.
  shannon      Measured and predicted Shannon numbers, one row per K.
  near-diag    Kernel ratio near the diagonal and two comparison forms.
  verify       Runs the acceptance checks, exits 4 if any fails.

e.g. main.py spectrum --d 2 --kappa 1 --K 40 --outer 2 --display json
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import math
import os
import sys

from absl import flags
from absl import logging
import numpy as np
from sfbslepian import acceptance
from sfbslepian import ballbasis
from sfbslepian import bessel
from sfbslepian import concentration
from sfbslepian import kernel
from sfbslepian import profiles
from sfbslepian import result_table

DISPLAY_FORMATS = result_table.DISPLAY_FORMATS

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_ACCEPTANCE = 4

# Consulted when --threads is 0.
THREADS_ENV = 'SFB_THREADS'

# Text displayed by usage help.
# The keys are the permissible subcommands.
SUBCOMMAND_HELP = {
    'profile':
        '\n    Columns r, U, U_d and W_d (dilated by kappa) over the r grid.',
    'kernel-diag':
        '\n    Normalized SFB kernel diagonal against its limit profile.'
        '\n    One block per K, stacked with a K column.',
    'ball-diag':
        '\n    Normalized kernel diagonal of the unit ball basis.'
        '\n    Boundary condition from --boundary, radii within [0, 1].',
    'spectrum':
        '\n    Eigenvalues of the concentration operator on [inner, outer].'
        '\n    The json document holds summary, bimodal counts and the'
        '\n    Shannon ratio.',
    'shannon':
        '\n    Trace and Hilbert-Schmidt norm against the plateau prediction.',
    'near-diag':
        '\n    K(x, x + y/K)/K(x, x) over the r grid, --y_len and --theta.',
    'verify':
        '\n    Runs the acceptance checks (all, or those named by --checks).',
}

SUBCOMMANDS = sorted(SUBCOMMAND_HELP)

# Flag defaults.
DEFAULT_CMDS = {
    'd': 2,
    'kappa': None,
    'L': None,
    'K': None,
    'K_list': None,
    'r_min': 0.0,
    'r_max': None,
    'samples': 121,
    'inner': 0.0,
    'outer': 1.0,
    'boundary': ballbasis.DIRICHLET,
    'nodes': 0,
    'y_len': ['0', '0.5', '1', '2'],
    'theta': ['0', '0.7853981633974483', '1.5707963267948966'],
    'epsilon': ['0.01', '0.05', '0.1'],
    'checks': None,
    'out': '-',
    'display': 'csv',
    'threads': 0,
}

# Upper end of the r grid when --r_max is not given.
DEFAULT_R_MAX = 3.0

FLAGS = flags.FLAGS

flags.DEFINE_integer('d', DEFAULT_CMDS['d'], '\n    Ambient dimension, >= 2.')
flags.DEFINE_float(
    'kappa', DEFAULT_CMDS['kappa'],
    '\n    Ratio L/K. L is derived from each K as round(kappa * K).')
flags.DEFINE_integer(
    'L', DEFAULT_CMDS['L'],
    '\n    Spherical harmonic bandwidth, given together with --K instead of'
    ' --kappa.')
flags.DEFINE_float('K', DEFAULT_CMDS['K'], '\n    Bessel bandwidth.')
flags.DEFINE_list(
    'K_list', DEFAULT_CMDS['K_list'],
    '\n    Comma separated bandwidths for a sweep, used with --kappa.')
flags.DEFINE_float('r_min', DEFAULT_CMDS['r_min'],
                   '\n    Smallest radius of the grid.')
flags.DEFINE_float(
    'r_max', DEFAULT_CMDS['r_max'],
    '\n    Largest radius of the grid, %s by default (1 for ball-diag).' %
    DEFAULT_R_MAX)
flags.DEFINE_integer('samples', DEFAULT_CMDS['samples'],
                     '\n    Number of grid radii, >= 2.')
flags.DEFINE_float('inner', DEFAULT_CMDS['inner'],
                   '\n    Inner radius of the domain, 0 for a ball.')
flags.DEFINE_float('outer', DEFAULT_CMDS['outer'],
                   '\n    Outer radius of the domain.')
flags.DEFINE_enum('boundary', DEFAULT_CMDS['boundary'],
                  list(ballbasis.BOUNDARY_CONDITIONS),
                  '\n    Boundary condition of the ball basis.')
flags.DEFINE_integer(
    'nodes', DEFAULT_CMDS['nodes'],
    '\n    Quadrature nodes per spectral block, 0 picks them from K.')
flags.DEFINE_list('y_len', DEFAULT_CMDS['y_len'],
                  '\n    Offset lengths for near-diag.')
flags.DEFINE_list('theta', DEFAULT_CMDS['theta'],
                  '\n    Offset angles in [0, pi] for near-diag.')
flags.DEFINE_list('epsilon', DEFAULT_CMDS['epsilon'],
                  '\n    Margins in (0, 1/2) for the bimodal counts.')
flags.DEFINE_list('checks', DEFAULT_CMDS['checks'],
                  '\n    Acceptance checks to run, all by default. One of %s.' %
                  acceptance.CHECK_NAMES)
flags.DEFINE_string('out', DEFAULT_CMDS['out'],
                    "\n    Output file, '-' for standard output.")
flags.DEFINE_enum('display', DEFAULT_CMDS['display'], DISPLAY_FORMATS,
                  '\n    Output format, one of %s.' % DISPLAY_FORMATS,
                  short_name='D')
flags.DEFINE_integer(
    'threads', DEFAULT_CMDS['threads'],
    '\n    Worker threads for spectra, 0 falls back to $%s and then to the'
    ' cpu count.' % THREADS_ENV)

# Hyphenated spellings, e.g. --r-max.
for _name in ('K_list', 'r_min', 'r_max', 'y_len'):
  flags.DEFINE_alias(_name.replace('_', '-'), _name)


class Error(Exception):
  """Base class for errors."""


class ConfigError(Error):
  """Invalid subcommand, flag value or combination of flags."""


# Subcommands that need a bandlimit, through --kappa or --L with --K.
BANDLIMITED = ('kernel-diag', 'ball-diag', 'spectrum', 'shannon', 'near-diag')


def _Floats(values, name):
  try:
    return tuple(float(value) for value in values or ())
  except ValueError:
    raise ConfigError('--%s expects numbers, found %s.' % (name, values))


def ResolveThreads(threads):
  """Thread count from the flag, the environment or the cpu count."""

  if threads:
    return threads
  env = os.environ.get(THREADS_ENV)
  if env:
    try:
      count = int(env)
    except ValueError:
      count = 0
    if count < 1:
      raise ConfigError('$%s must be a positive integer, found %r.' %
                        (THREADS_ENV, env))
    return count
  return os.cpu_count() or 1


class RunConfig(collections.namedtuple(
    'RunConfig', ['subcommand', 'd', 'kappa', 'L', 'K', 'K_list', 'r_min',
                  'r_max', 'samples', 'inner', 'outer', 'boundary', 'nodes',
                  'y_len', 'theta', 'epsilon', 'checks', 'out', 'display',
                  'threads'])):
  """Everything one invocation needs, validated."""

  __slots__ = ()

  @classmethod
  def FromFlags(cls, subcommand, flag_values=FLAGS):
    """Config from parsed flags."""
    return cls.FromValues(
        subcommand, **{name: flag_values[name].value for name in DEFAULT_CMDS})

  @classmethod
  def FromValues(cls, subcommand, **values):
    """Config from DEFAULT_CMDS overridden by values.

    Raises:
      ConfigError: unknown names or invalid values.
    """
    unknown = set(values) - set(DEFAULT_CMDS)
    if unknown:
      raise ConfigError('Unknown settings: %s.' % ', '.join(sorted(unknown)))
    merged = dict(DEFAULT_CMDS)
    merged.update(values)
    if merged['r_max'] is None:
      merged['r_max'] = 1.0 if subcommand == 'ball-diag' else DEFAULT_R_MAX
    for name in ('K_list', 'y_len', 'theta', 'epsilon'):
      merged[name] = _Floats(merged[name], name)
    merged['checks'] = tuple(merged['checks'] or ())
    merged['threads'] = ResolveThreads(merged['threads'])
    config = cls(subcommand=subcommand, **merged)
    config.Validate()
    return config

  def Validate(self):
    """Raises ConfigError on the first problem found."""

    if self.subcommand not in SUBCOMMANDS:
      raise ConfigError('Unknown subcommand %r, expected one of %s.' %
                        (self.subcommand, SUBCOMMANDS))
    if self.d < 2:
      raise ConfigError('--d must be >= 2, found %d.' % self.d)
    if self.samples < 2:
      raise ConfigError('The r grid needs at least 2 samples, found %d.' %
                        self.samples)
    if not 0 <= self.r_min < self.r_max:
      raise ConfigError('Need 0 <= r_min < r_max, found %s, %s.' %
                        (self.r_min, self.r_max))
    if self.subcommand == 'ball-diag' and self.r_max > 1:
      raise ConfigError('ball-diag radii lie in [0, 1], found r_max %s.' %
                        self.r_max)
    if self.subcommand == 'near-diag' and self.r_min <= 0:
      raise ConfigError('near-diag needs r_min > 0.')
    if self.nodes < 0 or self.nodes == 1:
      raise ConfigError('--nodes must be 0 or >= 2, found %d.' % self.nodes)
    if self.threads < 1:
      raise ConfigError('--threads must be >= 0, found %d.' % self.threads)
    if self.display not in DISPLAY_FORMATS:
      raise ConfigError('Unsupported display format: %r.' % self.display)
    for epsilon in self.epsilon:
      if not 0 < epsilon < 0.5:
        raise ConfigError('--epsilon values lie in (0, 1/2), found %s.' %
                          epsilon)
    for theta in self.theta:
      if not 0 <= theta <= math.pi:
        raise ConfigError('--theta values lie in [0, pi], found %s.' % theta)
    if any(y_len < 0 for y_len in self.y_len):
      raise ConfigError('--y_len values must be >= 0.')
    unknown = set(self.checks) - set(acceptance.CHECK_NAMES)
    if unknown:
      raise ConfigError('Unknown checks %s, expected some of %s.' %
                        (sorted(unknown), acceptance.CHECK_NAMES))
    if self.out != '-':
      directory = os.path.dirname(os.path.abspath(self.out))
      if not os.path.isdir(directory) or not os.access(directory, os.W_OK):
        raise ConfigError('Cannot write %r.' % self.out)
    if self.subcommand == 'spectrum' or self.subcommand == 'shannon':
      try:
        self.Domain()
      except concentration.DomainError as error_message:
        raise ConfigError(str(error_message))
    if self.subcommand in BANDLIMITED or self.subcommand == 'profile':
      self.Bandlimits()

  def Domain(self):
    return concentration.RadialDomain(self.inner, self.outer)

  def Kappa(self):
    """Dilation of the W_d column, 1 when no bandlimit was given."""
    if self.kappa is not None:
      return self.kappa
    if self.L is not None and self.K is not None:
      return self.L / self.K
    return 1.0

  def Bandlimits(self):
    """One kernel.Bandlimit per requested K.

    Raises:
      ConfigError: not exactly one of kappa and (L, K), or invalid values.
    """
    if self.kappa is not None and self.L is not None:
      raise ConfigError('Give either --kappa or --L with --K, not both.')
    if self.kappa is not None:
      ladder = self.K_list or ((self.K,) if self.K is not None else ())
      if not ladder:
        if self.subcommand in BANDLIMITED:
          raise ConfigError('--kappa needs --K or --K_list.')
        return []
      make = lambda value: kernel.Bandlimit.FromKappa(self.d, self.kappa,
                                                      value)
    elif self.L is not None or self.K is not None:
      if self.L is None or self.K is None:
        raise ConfigError('--L and --K must be given together.')
      if self.K_list:
        raise ConfigError('--K_list sweeps need --kappa.')
      ladder = (self.K,)
      make = lambda value: kernel.Bandlimit(self.d, self.L, value)
    else:
      if self.subcommand in BANDLIMITED:
        raise ConfigError('%s needs --kappa or --L with --K.' %
                          self.subcommand)
      return []
    try:
      return [make(value) for value in ladder]
    except bessel.DomainError as error_message:
      raise ConfigError(str(error_message))

  def Grid(self):
    return np.linspace(self.r_min, self.r_max, self.samples)


class SubcommandParser(dict):
  """Subcommand name to handler and help text."""

  class _Subcommand(object):
    """Holds attributes of a subcommand."""

    def __init__(self, attr):
      self.attr = attr

    # Method to call, returns (table, document).
    handler = property(lambda self: self.attr['handler'])
    # Text explaining how to use the subcommand.
    help_str = property(lambda self: self.attr['help_str'])

  def RegisterCommand(self, name, handler, help_str=''):
    self[name] = self._Subcommand({'handler': handler, 'help_str': help_str})

  def ExecHandler(self, name):
    """Execute the handler associated with this subcommand."""

    if name not in self:
      raise ConfigError('Unknown subcommand %r, expected one of %s.' %
                        (name, sorted(self)))
    return self[name].handler()

  def HelpText(self):
    return '\n'.join('%s:%s' % (name, self[name].help_str)
                     for name in sorted(self))


class SfbCli(object):
  """Runs one subcommand for a validated RunConfig.

  Attributes:
    config: RunConfig.
    subcommands: SubcommandParser, registered handlers.
    failed: bool, set by verify when a check failed.
  """

  def __init__(self, config):
    self.config = config
    self.failed = False
    self.subcommands = SubcommandParser()
    self.RegisterCommands(self.subcommands)

  def RegisterCommands(self, subcommands):
    """Register subcommands with the parser."""

    handlers = {
        'profile': self._CmdProfile,
        'kernel-diag': self._CmdKernelDiag,
        'ball-diag': self._CmdBallDiag,
        'spectrum': self._CmdSpectrum,
        'shannon': self._CmdShannon,
        'near-diag': self._CmdNearDiag,
        'verify': self._CmdVerify,
    }
    for name in SUBCOMMANDS:
      subcommands.RegisterCommand(name, handlers[name], SUBCOMMAND_HELP[name])

  def Run(self):
    """Executes the subcommand and writes its output.

    Returns:
      EXIT_OK, or EXIT_ACCEPTANCE when verify found a failing check.
    """
    logging.debug('Running %s with %s.', self.config.subcommand, self.config)
    table, document = self.subcommands.ExecHandler(self.config.subcommand)
    if self.config.display == 'json' and document is not None:
      self._PrintOutput(result_table.Dumps(document))
    else:
      self._PrintOutput(table.Render(self.config.display))
    if self.failed:
      return EXIT_ACCEPTANCE
    return EXIT_OK

  ##############################################################################
  # Subcommand handles.                                                        #
  ##############################################################################

  def _CmdProfile(self):
    """Profiles over the grid."""

    d = self.config.d
    kappa = self.config.Kappa()
    grid = self.config.Grid()
    table = result_table.ResultTable(['r', 'U', 'U_d', 'W_d'])
    columns = (profiles.ProfileU(grid), profiles.ProfileUd(d, grid),
               profiles.ProfileWLimit(d, grid, kappa))
    for row in zip(grid, *columns):
      table.AddRow(row)
    return table, None

  def _CmdKernelDiag(self):
    """Normalized kernel diagonal per K."""

    table = result_table.ResultTable(
        ['K', 'r', 'kernel_diag_normalized', 'W_target', 'abs_error'])
    grid = self.config.Grid()
    for bl in self.config.Bandlimits():
      target = profiles.ProfileWLimit(bl.d, grid, bl.kappa)
      for r, expected in zip(grid, target):
        value = kernel.KernelDiagNormalized(bl, r)
        table.AddRow([bl.K, r, value, expected, abs(value - expected)])
    return table, None

  def _CmdBallDiag(self):
    """Normalized ball kernel diagonal per K."""

    table = result_table.ResultTable(
        ['K', 'r', 'ball_diag_normalized', 'W_target', 'abs_error'])
    grid = self.config.Grid()
    for bl in self.config.Bandlimits():
      basis = ballbasis.BallBasis(bl.d, bl.L, bl.K, self.config.boundary)
      values = basis.Diag(grid) / bl.K ** bl.d
      target = profiles.ProfileWLimit(bl.d, grid, bl.kappa)
      for row in zip(grid, values, target):
        table.AddRow([bl.K, row[0], row[1], row[2], abs(row[1] - row[2])])
    return table, None

  def _Spectra(self):
    for bl in self.config.Bandlimits():
      yield bl, concentration.ComputeSpectrum(
          bl, self.config.Domain(), nodes=self.config.nodes or None,
          threads=self.config.threads)

  def _CmdSpectrum(self):
    """Merged eigenvalues, stacked per K, and the json summary document."""

    domain = self.config.Domain()
    table = result_table.ResultTable(['K', 'value', 'multiplicity', 'degree'])
    documents = []
    for bl, spectrum in self._Spectra():
      merged = spectrum.Merged()
      for entry in merged:
        table.AddRow([bl.K, entry.value, entry.multiplicity, entry.degree])
      shannon = concentration.ShannonNumber(bl, domain, spectrum=spectrum)
      documents.append({
          'bandlimit': {'d': bl.d, 'L': bl.L, 'K': bl.K, 'kappa': bl.kappa},
          'domain': {'inner': domain.inner, 'outer': domain.outer},
          'nodes': spectrum.nodes,
          'eigenvalues': [entry._asdict() for entry in merged],
          'summary': spectrum.Summary(),
          'bimodal': [concentration.Bimodal(spectrum, epsilon)._asdict()
                      for epsilon in self.config.epsilon],
          'plateau_prediction': concentration.PlateauPrediction(
              bl.d, bl.kappa, domain),
          'shannon': shannon._asdict(),
      })
    return table, {'spectra': documents}

  def _CmdShannon(self):
    """One row of trace statistics per K."""

    domain = self.config.Domain()
    table = result_table.ResultTable(
        ['K', 'L', 'measured', 'predicted', 'ratio', 'hs_norm_sq',
         'hs_ratio'])
    for bl, spectrum in self._Spectra():
      result = concentration.ShannonNumber(bl, domain, spectrum=spectrum)
      hs_ratio = (result.hs_norm_sq / result.predicted if result.predicted
                  else float('nan'))
      table.AddRow([bl.K, bl.L, result.measured, result.predicted,
                    result.ratio, result.hs_norm_sq, hs_ratio])
    return table, table.Document()

  def _CmdNearDiag(self):
    """Ratio field over r, y_len and theta."""

    table = result_table.ResultTable(
        ['K', 'r', 'y_len', 'theta', 'ratio', 'radial_form', 'product_form'])
    for bl in self.config.Bandlimits():
      for r in self.config.Grid():
        for y_len in self.config.y_len:
          for theta in self.config.theta:
            result = kernel.NearDiagRatio(bl, r, y_len, theta)
            table.AddRow([bl.K, r, y_len, theta, result.ratio,
                          result.radial_form, result.product_form])
    return table, None

  def _CmdVerify(self):
    """Acceptance checks, one row each."""

    table = result_table.ResultTable(
        ['name', 'passed', 'measured', 'target', 'seconds'])
    results = acceptance.RunAcceptance(names=self.config.checks or None,
                                       progress=True)
    for result in results:
      table.AddRow(list(result))
      if not result.passed:
        self._PrintWarning('Check %s failed: measured %s, target %s.' %
                           (result.name, result.measured, result.target))
    self.failed = not all(result.passed for result in results)
    return table, table.Document()

  ##############################################################################
  # End of subcommand handles.                                                 #
  ##############################################################################

  def _PrintWarning(self, msg):
    """Prints warnings to stderr."""

    if not msg:
      return
    print(msg, file=sys.stderr)

  def _PrintOutput(self, msg):
    """Writes output to --out, standard output for '-'."""

    if not msg:
      return
    if not msg.endswith('\n'):
      msg += '\n'
    if self.config.out == '-':
      sys.stdout.write(msg)
      return
    with open(self.config.out, 'w') as out_file:
      out_file.write(msg)


def Execute(argv):
  """Runs the subcommand named in argv[1] with the parsed flags.

  Args:
    argv: list, program name and the positional arguments left by absl.

  Returns:
    Exit code: EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC or EXIT_ACCEPTANCE.
  """
  if len(argv) != 2:
    print('Expected one subcommand, one of %s.\n%s' % (SUBCOMMANDS, __doc__),
          file=sys.stderr)
    return EXIT_CONFIG
  try:
    logging.debug('Executing %s.', argv[1])
    config = RunConfig.FromFlags(argv[1])
    return SfbCli(config).Run()
  except (ConfigError, bessel.DomainError) as error_message:
    print('%s' % error_message, file=sys.stderr)
    return EXIT_CONFIG
  except ArithmeticError as error_message:
    print('%s' % error_message, file=sys.stderr)
    return EXIT_NUMERIC
