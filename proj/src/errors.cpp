// Copyright 2026 The cavent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cavent/errors.hpp"

namespace cavent {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Dimension: return "dimension error";
    case ErrorKind::Parameter: return "parameter error";
    case ErrorKind::NotPsd: return "not-PSD error";
    case ErrorKind::Range: return "range error";
    case ErrorKind::NoSteadyState: return "no-steady-state error";
    case ErrorKind::Ambiguity: return "ambiguity error";
    case ErrorKind::Mode: return "mode error";
    case ErrorKind::DegenerateSteadyState: return "degenerate-steady-state error";
    case ErrorKind::State: return "state error";
    case ErrorKind::NotXState: return "not-X-state error";
    case ErrorKind::Integration: return "integration-accuracy error";
    case ErrorKind::Usage: return "usage error";
    case ErrorKind::Io: return "I/O error";
    case ErrorKind::Consistency: return "internal-consistency error";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind)
{
}

} // namespace cavent
