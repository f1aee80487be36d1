// Bundle directory serialization.
//
// A generated instance round-trips through a directory of small files:
//   instance.gr       the graph
//   params.json       problem tag, degree bound, budget, palette size
//   witness.td        tree/path decomposition (when the generator emits one)
//   witness.forest    elimination forest (tree-depth and vertex-cover bundles)
//   witness.cover     explicit vertex cover, one id per line
//   provenance.json   generator id plus the generator's metadata counters
//
// The JSON files use a deliberately small dialect: one object whose values
// are strings, integers, or (for "metadata") one nested object of strings.
// load_bundle restores everything except the forward-certificate closures,
// which only exist in process.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "degbound/decomp.hpp"
#include "degbound/graph.hpp"
#include "degbound/reductions.hpp"
#include "degbound/util.hpp"

namespace degbound {

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot open for writing: " + path.string());
  out << text;
  if (!out) throw Error(Errc::io_error, "write failed: " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open for reading: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string json_escape(const std::string& raw) {
  std::string out;
  for (char ch : raw) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char hex[8];
          std::snprintf(hex, sizeof hex, "\\u%04x", ch);
          out += hex;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

// Strict scanner for the dialect written above: flat objects of string keys
// mapping to strings, integers, or one nested flat string-to-string object.
class JsonScanner {
 public:
  explicit JsonScanner(const std::string& text) : text_(text) {}

  std::map<std::string, std::string> flat() {
    std::map<std::string, std::string> out;
    expect('{');
    skip_ws();
    if (peek() == '}') {
      ++pos_;
      return out;
    }
    while (true) {
      std::string key = string_token();
      expect(':');
      skip_ws();
      out[key] = value_token();
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return out;
    }
  }

  // Top-level object whose "metadata" key (if any) is a nested object.
  void top(std::map<std::string, std::string>& scalars,
           std::map<std::string, std::string>& metadata) {
    expect('{');
    skip_ws();
    if (peek() == '}') {
      ++pos_;
      return;
    }
    while (true) {
      std::string key = string_token();
      expect(':');
      skip_ws();
      if (peek() == '{') {
        if (key != "metadata") throw Error(Errc::io_error, "unexpected nested object: " + key);
        JsonScanner nested(text_);
        nested.pos_ = pos_;
        metadata = nested.flat();
        pos_ = nested.pos_;
      } else {
        scalars[key] = value_token();
      }
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return;
    }
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    if (pos_ >= text_.size()) throw Error(Errc::io_error, "truncated json");
    return text_[pos_];
  }

  void expect(char ch) {
    skip_ws();
    if (peek() != ch)
      throw Error(Errc::io_error, std::string("expected '") + ch + "' in json");
    ++pos_;
  }

  std::string string_token() {
    expect('"');
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) throw Error(Errc::io_error, "unterminated json string");
      char ch = text_[pos_++];
      if (ch == '"') return out;
      if (ch == '\\') {
        if (pos_ >= text_.size()) throw Error(Errc::io_error, "unterminated json escape");
        char esc = text_[pos_++];
        switch (esc) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case 'u': {
            if (pos_ + 4 > text_.size()) throw Error(Errc::io_error, "bad unicode escape");
            int code = std::stoi(text_.substr(pos_, 4), nullptr, 16);
            pos_ += 4;
            out += static_cast<char>(code);
            break;
          }
          default:
            throw Error(Errc::io_error, "unsupported json escape");
        }
      } else {
        out += ch;
      }
    }
  }

  std::string value_token() {
    skip_ws();
    if (peek() == '"') return string_token();
    std::string out;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      out += text_[pos_++];
    }
    if (out.empty()) throw Error(Errc::io_error, "expected json value");
    return out;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

long long parse_count(const std::map<std::string, std::string>& scalars, const std::string& key) {
  auto it = scalars.find(key);
  if (it == scalars.end()) throw Error(Errc::io_error, "missing json key: " + key);
  try {
    return std::stoll(it->second);
  } catch (const std::exception&) {
    throw Error(Errc::io_error, "non-numeric json value for key: " + key);
  }
}

std::string problem_name(ProblemKind kind) {
  return kind == ProblemKind::bdvd ? "bdvd" : "dc";
}

ProblemKind problem_from_name(const std::string& name) {
  if (name == "bdvd") return ProblemKind::bdvd;
  if (name == "dc") return ProblemKind::dc;
  throw Error(Errc::io_error, "unknown problem tag: " + name);
}

std::string emit_cover(const VertexSet& cover) {
  std::ostringstream out;
  out << cover.size() << '\n';
  for (Vertex v : cover) out << v << '\n';
  return out.str();
}

VertexSet parse_cover(const std::string& text) {
  std::istringstream in(text);
  long long count = 0;
  if (!(in >> count) || count < 0) throw Error(Errc::io_error, "bad cover header");
  VertexSet cover;
  for (long long i = 0; i < count; ++i) {
    long long v = 0;
    if (!(in >> v) || v < 1) throw Error(Errc::io_error, "bad cover entry");
    cover.push_back(static_cast<Vertex>(v));
  }
  return cover;
}

}  // namespace

void save_bundle(const ReductionBundle& bundle, const std::string& dir) {
  fs::path root(dir);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec) throw Error(Errc::io_error, "cannot create directory: " + dir);

  write_file(root / "instance.gr", emit_gr(bundle.graph));

  std::ostringstream params;
  params << "{\n"
         << "  \"problem\": \"" << problem_name(bundle.problem) << "\",\n"
         << "  \"delta\": " << bundle.delta << ",\n"
         << "  \"budget\": " << bundle.budget << ",\n"
         << "  \"chi\": " << bundle.chi << "\n"
         << "}\n";
  write_file(root / "params.json", params.str());

  std::ostringstream prov;
  prov << "{\n  \"generator\": \"" << json_escape(bundle.generator) << "\",\n  \"metadata\": {";
  bool first = true;
  for (const auto& [key, value] : bundle.metadata) {
    prov << (first ? "\n" : ",\n") << "    \"" << json_escape(key) << "\": \""
         << json_escape(value) << "\"";
    first = false;
  }
  prov << (first ? "" : "\n  ") << "},\n  \"vertices\": " << bundle.graph.num_vertices()
       << "\n}\n";
  write_file(root / "provenance.json", prov.str());

  if (bundle.path_witness) write_file(root / "witness.td", emit_td(*bundle.path_witness));
  if (bundle.forest_witness)
    write_file(root / "witness.forest", emit_forest(*bundle.forest_witness));
  if (bundle.cover_witness) write_file(root / "witness.cover", emit_cover(*bundle.cover_witness));
}

ReductionBundle load_bundle(const std::string& dir) {
  fs::path root(dir);
  ReductionBundle bundle;
  bundle.graph = parse_gr(read_file(root / "instance.gr"));

  JsonScanner params(read_file(root / "params.json"));
  std::map<std::string, std::string> scalars = params.flat();
  auto tag = scalars.find("problem");
  if (tag == scalars.end()) throw Error(Errc::io_error, "params.json lacks a problem tag");
  bundle.problem = problem_from_name(tag->second);
  bundle.delta = static_cast<int>(parse_count(scalars, "delta"));
  bundle.budget = parse_count(scalars, "budget");
  bundle.chi = static_cast<int>(parse_count(scalars, "chi"));

  std::string prov_text = read_file(root / "provenance.json");
  JsonScanner prov(prov_text);
  std::map<std::string, std::string> prov_scalars;
  prov.top(prov_scalars, bundle.metadata);
  auto gen = prov_scalars.find("generator");
  if (gen == prov_scalars.end()) throw Error(Errc::io_error, "provenance.json lacks a generator id");
  bundle.generator = gen->second;

  if (fs::exists(root / "witness.td"))
    bundle.path_witness = parse_td(read_file(root / "witness.td"));
  if (fs::exists(root / "witness.forest"))
    bundle.forest_witness = parse_forest(read_file(root / "witness.forest"));
  if (fs::exists(root / "witness.cover"))
    bundle.cover_witness = parse_cover(read_file(root / "witness.cover"));
  return bundle;
}

}  // namespace degbound
