// Acceptance run: one line per criterion, exit status 0 only if all pass.
//
//   acceptance <path-to-giry-cli>
//
// The CLI path is needed for the determinism criterion, which runs
// `giry all --seed 0` twice and compares the outputs byte for byte.

#include <giry/acceptance.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-giry-cli>\n";
    return 2;
  }
  giry::SuiteConfig cfg;
  bool all_ok = true;
  for (const auto& c : giry::acceptance::criteria()) {
    auto o = giry::acceptance::run(c, cfg);
    std::cout << giry::acceptance::line(o) << std::endl;
    if (!o.ok()) {
      all_ok = false;
      std::cout << o.report.to_text();
    }
  }

  auto start = std::chrono::steady_clock::now();
  std::string cmd = std::string("\"") + argv[1] + "\" all --seed 0 2>/dev/null";
  int s1 = 0, s2 = 0;
  auto first = capture(cmd, s1);
  auto second = capture(cmd, s2);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool same = s1 == 0 && s2 == 0 && !first.empty() && first == second;
  std::printf("criterion 10 determinism: %s (%.2f s, %zu bytes)%s\n", same ? "PASS" : "FAIL", secs, first.size(),
              same ? "" : (s1 != 0 || s2 != 0 ? " nonzero exit" : " outputs differ"));
  all_ok = all_ok && same;
  return all_ok ? 0 : 1;
}
