/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

#include <iostream>
#include <string>
#include <vector>

#include "sierp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sierp::cli::run(std::move(args), std::cout, std::cerr);
}
