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

"""Collects per-degree results that arrive out of order from worker threads.

  Used to hand spectral blocks back in degree order, whatever order the
  workers finish in.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import threading
from absl import logging
import tqdm

PROGRESS_MESSAGE = '#! Blocks:'


class BlockResponse(object):
  """Stores block results and current state for a parallel computation.

  Each block (one spherical harmonic degree) is registered up front by
  SetBlock. Workers deliver results through AddResult in any order. GetBlock
  is polled and returns the next block in degree order once it has arrived,
  so the consumer sees a deterministic sequence.

  Attributes:
    done: (obj) Event object, set once every registered block was returned.
  """

  def Synchronized(func):  # pylint: disable=no-self-argument
    """Synchronization decorator."""

    def Wrapper(main_obj, *args, **kwargs):
      with main_obj._lock:          # pylint: disable=protected-access
        return func(main_obj, *args, **kwargs)  # pylint: disable=not-callable
    return Wrapper

  def __init__(self):
    """Init starting values."""

    self._lock = threading.Lock()
    self._order = []            # Block keys in the order they are returned.
    self._results = {}          # Delivered results indexed by block key.
    self._current = 0           # Index into _order of the next block out.
    self.done = threading.Event()
    # Graphic to indicate progress receiving blocks.
    self._progressbar = None

  @Synchronized
  def SetBlock(self, key):
    """Registers a block, its position fixes the output order.

    Args:
      key: hashable, block identifier (the degree l).
    """

    if key in self._order:
      logging.warning('Block %s registered twice.', key)
      return
    self._order.append(key)

  @Synchronized
  def AddResult(self, key, result):
    """Add a result for a registered block.

    Args:
      key: hashable, block identifier.
      result: obj, the computed block.

    Returns:
      True if the block was expected, False for an unknown or repeated key.
    """

    if key not in self._order or key in self._results:
      logging.warning("Discarded result for block '%s', not expected.", key)
      return False
    self._results[key] = result
    if self._progressbar is not None:
      self._progressbar.update()
    return True

  @Synchronized
  def GetBlock(self):
    """Return the next block in registration order if it has arrived.

    Returns:
      Tuple of (key, result), or None if the next block is not ready.
    """

    if self._current >= len(self._order):
      logging.debug('GetBlock: all blocks returned.')
      self.done.set()
      if self._progressbar is not None:
        self._progressbar.close()
        self._progressbar = None
      return
    key = self._order[self._current]
    if key not in self._results:
      logging.debug('GetBlock: block %s not ready.', key)
      return
    self._current += 1
    return (key, self._results[key])

  def Pending(self):
    """Number of registered blocks without a result."""
    with self._lock:
      return len(self._order) - len(self._results)

  def StartIndicator(self, message=PROGRESS_MESSAGE):
    """Starts a progress indicator over the registered blocks."""
    self._progressbar = tqdm.tqdm(total=len(self._order), desc=message)
