#include "fplab/table_io.hpp"

#include <fstream>
#include <sstream>

#include "fplab/errors.hpp"
#include "fplab/limits.hpp"
#include "fplab/phase.hpp"
#include "fplab/polynomial.hpp"

namespace fplab {

TableFunction read_table_text(const std::string& path, std::int32_t p, int n) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open table file " + path);
  std::vector<std::complex<double>> values;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double re = 0.0;
    if (!(fields >> re)) continue;  // blank line
    double im = 0.0;
    fields >> im;
    values.emplace_back(re, im);
  }
  const std::uint64_t expected = domain_size(p, n);
  if (values.size() != expected) {
    throw ContractError("table " + path + " has " +
                        std::to_string(values.size()) + " values, expected " +
                        std::to_string(expected));
  }
  return TableFunction(p, n, std::move(values));
}

void write_table_text(const std::string& path, const TableFunction& f) {
  std::ofstream out(path);
  if (!out) throw ContractError("cannot write table file " + path);
  out.precision(17);
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    out << f[i].real() << ' ' << f[i].imag() << '\n';
  }
  if (!out) throw ContractError("write failed for " + path);
}

TableFunction read_table_binary(const std::string& path, std::int32_t p,
                                int n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open table file " + path);
  const std::uint64_t expected = domain_size(p, n);
  std::vector<std::complex<double>> values(static_cast<std::size_t>(expected));
  in.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(expected * sizeof(std::complex<double>)));
  if (static_cast<std::uint64_t>(in.gcount()) !=
      expected * sizeof(std::complex<double>)) {
    throw ContractError("table " + path + " is shorter than p^n values");
  }
  char extra = 0;
  if (in.read(&extra, 1)) {
    throw ContractError("table " + path + " is longer than p^n values");
  }
  return TableFunction(p, n, std::move(values));
}

void write_table_binary(const std::string& path, const TableFunction& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("cannot write table file " + path);
  out.write(reinterpret_cast<const char*>(f.values().data()),
            static_cast<std::streamsize>(f.size() * sizeof(std::complex<double>)));
  if (!out) throw ContractError("write failed for " + path);
}

namespace {

bool has_prefix(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

TableFunction load_function(const std::string& spec, std::int32_t p, int n) {
  if (has_prefix(spec, "poly:")) {
    const Polynomial pi = parse_polynomial(spec.substr(5), p, n);
    return phase_table(pi);
  }
  if (has_prefix(spec, "indicator:")) {
    return load_indicator(spec.substr(10), p, n);
  }
  if (has_suffix(spec, ".bin")) return read_table_binary(spec, p, n);
  return read_table_text(spec, p, n);
}

TableFunction load_indicator(const std::string& spec, std::int32_t p, int n) {
  const std::uint64_t points = domain_size(p, n);
  charge(points);
  TableFunction out(p, n);

  if (has_prefix(spec, "poly:")) {
    const auto sep = spec.find(":in:");
    if (sep == std::string::npos) {
      throw ContractError("set spec needs ':in:<residues>'");
    }
    const Polynomial pi = parse_polynomial(spec.substr(5, sep - 5), p, n);
    std::vector<bool> wanted(static_cast<std::size_t>(p), false);
    std::istringstream fields(spec.substr(sep + 4));
    std::string field;
    bool any = false;
    while (std::getline(fields, field, ',')) {
      long long v = 0;
      try {
        v = std::stoll(field);
      } catch (const std::exception&) {
        throw ContractError("bad residue '" + field + "'");
      }
      const long long r = ((v % p) + p) % p;
      wanted[static_cast<std::size_t>(r)] = true;
      any = true;
    }
    if (!any) throw ContractError("empty residue list in set spec");
    for (std::uint64_t i = 0; i < points; ++i) {
      if (wanted[static_cast<std::size_t>(pi.eval(decode_point(p, i, n)))]) {
        out[i] = 1.0;
      }
    }
    return out;
  }

  std::ifstream in(spec);
  if (!in) throw ContractError("cannot open index list " + spec);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::uint64_t index = 0;
    if (!(fields >> index)) continue;
    if (index >= points) {
      throw ContractError("index " + std::to_string(index) +
                          " outside the domain");
    }
    out[index] = 1.0;
  }
  return out;
}

}  // namespace fplab
