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

"""End to end test of the subcommands, from parsed flags to exit code."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json

from absl.testing import absltest as unittest
from absl.testing import flagsaver
import mock
from sfbslepian import concentration
from sfbslepian import sfb_lib as sfb


class UnitTestEndToEnd(unittest.TestCase):

  @classmethod
  def setUpClass(cls):
    super(UnitTestEndToEnd, cls).setUpClass()
    sfb.FLAGS([__file__,])

  def setUp(self):
    super(UnitTestEndToEnd, self).setUp()
    self.out = self.create_tempfile().full_path
    self.stderr = mock.patch.object(sfb.sys, 'stderr')
    self.stderr.start()
    self.addCleanup(self.stderr.stop)

  def _Read(self):
    with open(self.out) as out_file:
      return out_file.read()

  def testProfile(self):
    with flagsaver.flagsaver(d=3, kappa=1.0, r_max=3.0, samples=300,
                             out=self.out):
      self.assertEqual(sfb.EXIT_OK, sfb.Execute(['main.py', 'profile']))
    lines = self._Read().splitlines()
    self.assertEqual('r,U,U_d,W_d', lines[0])
    self.assertEqual(301, len(lines))

  def testHyphenatedFlags(self):
    with flagsaver.flagsaver():
      argv = sfb.FLAGS(['main.py', 'profile', '--d', '3', '--r-max', '2',
                        '--samples', '5', '--out', self.out])
      self.assertEqual(2.0, sfb.FLAGS.r_max)
      self.assertEqual(sfb.EXIT_OK, sfb.Execute(argv))
    lines = self._Read().splitlines()
    self.assertEqual('r,U,U_d,W_d', lines[0])
    self.assertEqual(6, len(lines))
    self.assertEqual('2', lines[-1].split(',')[0])

  def testNearDiag(self):
    with flagsaver.flagsaver(d=3, kappa=1.0, K=128.0, r_min=0.5, r_max=1.0,
                             samples=2, out=self.out):
      self.assertEqual(sfb.EXIT_OK, sfb.Execute(['main.py', 'near-diag']))
    lines = self._Read().splitlines()
    self.assertEqual('K,r,y_len,theta,ratio,radial_form,product_form',
                     lines[0])
    self.assertEqual(1 + 2 * 4 * 3, len(lines))
    self.assertEqual(['1', '1', '1'], lines[1].split(',')[4:])

  def testDegenerateGrid(self):
    with flagsaver.flagsaver(samples=1, out=self.out):
      self.assertEqual(sfb.EXIT_CONFIG, sfb.Execute(['main.py', 'profile']))
    self.assertEqual('', self._Read())

  def testArguments(self):
    self.assertEqual(sfb.EXIT_CONFIG, sfb.Execute(['main.py']))
    self.assertEqual(sfb.EXIT_CONFIG,
                     sfb.Execute(['main.py', 'profile', 'spectrum']))
    self.assertEqual(sfb.EXIT_CONFIG, sfb.Execute(['main.py', 'plot']))

  def testSpectrum(self):
    with flagsaver.flagsaver(kappa=1.0, K=8.0, nodes=64, display='json',
                             threads=2, out=self.out):
      self.assertEqual(sfb.EXIT_OK, sfb.Execute(['main.py', 'spectrum']))
    document = json.loads(self._Read())
    summary = document['spectra'][0]['summary']
    self.assertGreaterEqual(summary['delta_k'], 0)
    self.assertEqual(0, summary['flagged'])

  def testNumericalFailure(self):
    with mock.patch.object(concentration, 'ComputeSpectrum') as mock_compute:
      mock_compute.side_effect = concentration.EigenSolverError(
          'Eigensolver failed for block l=3.')
      with flagsaver.flagsaver(kappa=1.0, K=8.0, out=self.out):
        self.assertEqual(sfb.EXIT_NUMERIC,
                         sfb.Execute(['main.py', 'shannon']))

  def testKernelDiagSweep(self):
    with flagsaver.flagsaver(kappa=1.0, K_list=['4', '8'], r_max=1.0,
                             samples=3, display='tbl', out=self.out):
      self.assertEqual(sfb.EXIT_OK, sfb.Execute(['main.py', 'kernel-diag']))
    self.assertIn('kernel_diag_normalized', self._Read())


if __name__ == '__main__':
  unittest.main()
