#include "degbound/util.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace degbound {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_header: return "malformed_header";
    case Errc::vertex_out_of_range: return "vertex_out_of_range";
    case Errc::duplicate_edge: return "duplicate_edge";
    case Errc::bad_line: return "bad_line";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::invalid_decomposition: return "invalid_decomposition";
    case Errc::invalid_forest: return "invalid_forest";
    case Errc::invalid_csp: return "invalid_csp";
    case Errc::invalid_formula: return "invalid_formula";
    case Errc::contract_violation: return "contract_violation";
    case Errc::io_error: return "io_error";
    case Errc::not_implemented: return "not_implemented";
  }
  return "unknown";
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DEGBOUND_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn, int threads) {
  int n = resolve_threads(threads);
  if (n <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  int spawn = static_cast<int>(std::min<std::size_t>(count, static_cast<std::size_t>(n)));
  pool.reserve(spawn);
  for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open file for reading: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot open file for writing: " + path);
  out << content;
  if (!out) throw Error(Errc::io_error, "write failed: " + path);
}

}  // namespace degbound
