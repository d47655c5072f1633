#include "symcop/tensor_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace symcop {

TensorParseError::TensorParseError(int line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t p = 0;
  while (p < line.size()) {
    while (p < line.size() && (line[p] == ' ' || line[p] == '\t' ||
                               line[p] == '\r'))
      ++p;
    std::size_t q = p;
    while (q < line.size() && line[q] != ' ' && line[q] != '\t' &&
           line[q] != '\r')
      ++q;
    if (q > p)
      words.push_back(line.substr(p, q - p));
    p = q;
  }
  return words;
}

bool parse_int(std::string_view w, int &out) {
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), out);
  return ec == std::errc() && ptr == w.data() + w.size();
}

bool parse_real(std::string_view w, double &out) {
  if (!w.empty() && w.front() == '+')
    w.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), out);
  return ec == std::errc() && ptr == w.data() + w.size() && std::isfinite(out);
}

} // namespace

SymTensor parse_tensor(std::string_view text) {
  int line_no = 0;
  int order = 0, dim = 0;
  bool have_header = false;
  bool general = false;
  std::map<MultiIndex, std::pair<double, int>> seen; // value, line

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty())
      continue;

    if (!have_header) {
      if (words.size() != 4 || words[0] != "tensor")
        throw TensorParseError(
            line_no, "expected header 'tensor <order> <dim> symmetric|general'");
      if (!parse_int(words[1], order) || order < 2)
        throw TensorParseError(line_no, "order must be an integer >= 2");
      if (!parse_int(words[2], dim) || dim < 1)
        throw TensorParseError(line_no, "dimension must be an integer >= 1");
      if (words[3] == "general")
        general = true;
      else if (words[3] != "symmetric")
        throw TensorParseError(line_no, "mode must be symmetric or general");
      have_header = true;
      continue;
    }

    if (static_cast<int>(words.size()) != order + 1)
      throw TensorParseError(line_no, "expected " + std::to_string(order) +
                                          " indices and a value");
    MultiIndex idx(static_cast<std::size_t>(order));
    for (int j = 0; j < order; ++j) {
      int v = 0;
      if (!parse_int(words[j], v))
        throw TensorParseError(line_no, "malformed index '" +
                                            std::string(words[j]) + "'");
      if (v < 1 || v > dim)
        throw TensorParseError(line_no, "index " + std::to_string(v) +
                                            " out of range 1.." +
                                            std::to_string(dim));
      idx[j] = v - 1;
    }
    double value = 0.0;
    if (!parse_real(words[order], value))
      throw TensorParseError(line_no, "malformed value '" +
                                          std::string(words[order]) + "'");
    const MultiIndex key = general ? idx : canonicalize(idx);
    auto [it, inserted] = seen.emplace(key, std::make_pair(value, line_no));
    if (!inserted && it->second.first != value)
      throw TensorParseError(line_no,
                             "conflicting duplicate of the entry on line " +
                                 std::to_string(it->second.second));
  }
  if (!have_header)
    throw TensorParseError(line_no, "missing header");

  SymTensorBuilder b(order, dim);
  if (!general) {
    for (const auto &[idx, v] : seen)
      b.set(idx, v.first);
    return b.build();
  }
  std::map<MultiIndex, double> orbit_sums;
  for (const auto &[idx, v] : seen)
    orbit_sums[canonicalize(idx)] += v.first;
  for (const auto &[idx, sum] : orbit_sums)
    b.set(idx, sum / permutation_count(idx));
  b.mark_symmetrized();
  return b.build();
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string emit_tensor(const SymTensor &a) {
  std::string out = "tensor " + std::to_string(a.order()) + " " +
                    std::to_string(a.dim()) + " symmetric\n";
  for (const auto &e : a.entries()) {
    for (int i : e.index) {
      out += std::to_string(i + 1);
      out += ' ';
    }
    out += format_double(e.value);
    out += '\n';
  }
  return out;
}

SymTensor read_tensor_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tensor(buf.str());
}

void write_tensor_file(const std::string &path, const SymTensor &a) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << emit_tensor(a);
}

} // namespace symcop
