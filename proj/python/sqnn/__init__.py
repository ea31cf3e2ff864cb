# Copyright 2026 The SQNN Authors.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Python bindings for the sqnn simulator and trainer."""

from ._core import (
    Axis,
    Backend,
    CheckpointError,
    Circuit,
    ConfigError,
    DataError,
    Model,
    ReadoutPrep,
    SqnnError,
    angle_encode,
    basis_encode,
    ising,
    load_checkpoint,
    load_split,
    partition,
    preset_names,
    resolve_config,
    rotation,
    train,
)

__all__ = [
    "Axis",
    "Backend",
    "CheckpointError",
    "Circuit",
    "ConfigError",
    "DataError",
    "Model",
    "ReadoutPrep",
    "SqnnError",
    "angle_encode",
    "basis_encode",
    "ising",
    "load_checkpoint",
    "load_split",
    "partition",
    "preset_names",
    "resolve_config",
    "rotation",
    "train",
]
