// Copyright 2026 The extraconn Authors.
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

#include <unistd.h>

#include <csignal>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "cli.h"
#include "extraconn/parallel.h"

namespace {

// Async-signal-safe: formats the progress counter by hand.
void OnInterrupt(int) {
  char buffer[96];
  const char prefix[] = "\ninterrupted after ";
  const char suffix[] = " instances; partial results discarded\n";
  std::size_t len = 0;
  for (char c : prefix) {
    if (c) buffer[len++] = c;
  }
  std::uint64_t done = extraconn::ProgressCounter().load();
  char digits[24];
  int count = 0;
  do {
    digits[count++] = static_cast<char>('0' + done % 10);
    done /= 10;
  } while (done > 0);
  while (count > 0) buffer[len++] = digits[--count];
  for (char c : suffix) {
    if (c && len < sizeof(buffer)) buffer[len++] = c;
  }
  [[maybe_unused]] auto ignored = ::write(STDERR_FILENO, buffer, len);
  ::_exit(130);
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, OnInterrupt);
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return extraconn::cli::Run(args, std::cin, std::cout, std::cerr);
}
