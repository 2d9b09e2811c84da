// Copyright 2026 The wafmatrix Authors
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

#ifndef WAFMATRIX_CLI_HPP_
#define WAFMATRIX_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace waf {

/// Runs the command line `args` (program name excluded). Exit codes: 0 for
/// success or YES, 1 for NO or verify disagreements, 2 for usage, I/O,
/// parse and precondition errors.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace waf

#endif  // WAFMATRIX_CLI_HPP_
