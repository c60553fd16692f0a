// Copyright 2026 The specdiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef SPECDIFF_ENGINES_SUBPROCESS_H_
#define SPECDIFF_ENGINES_SUBPROCESS_H_

#include <string>

namespace specdiff::engines {

struct ProcessResult {
  bool timed_out = false;
  bool signaled = false;
  int exit_code = 0;
  int signal = 0;
  std::string out;
  std::string err;
};

// Runs `command` through /bin/sh with `input` on standard input. The child
// is killed once `timeout_seconds` elapse. Throws std::runtime_error when
// the process cannot be started.
ProcessResult RunProcess(const std::string& command, const std::string& input,
                         double timeout_seconds);

}  // namespace specdiff::engines

#endif  // SPECDIFF_ENGINES_SUBPROCESS_H_
