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

"""Executable for sfbslepian."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import sys
from absl import app
import sfbslepian.sfb_lib as sfb


def main(argv):
  sys.exit(sfb.Execute(argv))


if __name__ == '__main__':
  app.run(main)
