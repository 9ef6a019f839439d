#include "mc2red/text_format.hpp"

#include "mc2red/errors.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace mc2red {

namespace {

std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("expected an index, got '" + tok + "'", line);
  }
  try {
    return std::stoul(tok);
  } catch (const std::exception&) {
    throw ParseError("index out of range: '" + tok + "'", line);
  }
}

BigInt parse_value(const std::string& tok, std::size_t line) {
  try {
    return parse_big_int(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line);
  }
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

template <typename Range>
std::string join(const Range& r) {
  std::string out;
  for (const auto& v : r) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

SparseIntSystem read_system(std::istream& in) {
  SparseIntSystem sys;
  bool have_header = false;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::set<std::size_t> seen_rhs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tok = tokens(line);
    if (!have_header) {
      if (tok.size() != 3) throw ParseError("header must be 'm n class_tag'", lineno);
      const auto tag = parse_matrix_class(tok[2]);
      if (!tag) throw ParseError("unknown class tag '" + tok[2] + "'", lineno);
      sys = SparseIntSystem(parse_index(tok[0], lineno), parse_index(tok[1], lineno), *tag);
      have_header = true;
      continue;
    }
    if (tok[0] == "E") {
      if (tok.size() != 4) throw ParseError("entry line must be 'E i j v'", lineno);
      const std::size_t i = parse_index(tok[1], lineno);
      const std::size_t j = parse_index(tok[2], lineno);
      if (i == 0 || i > sys.rows() || j == 0 || j > sys.cols()) {
        throw ParseError("entry (" + tok[1] + ", " + tok[2] + ") outside the declared shape", lineno);
      }
      if (!seen.emplace(i, j).second) throw ParseError("duplicate entry (" + tok[1] + ", " + tok[2] + ")", lineno);
      sys.set_entry(i, j, parse_value(tok[3], lineno));
    } else if (tok[0] == "B") {
      if (tok.size() != 3) throw ParseError("rhs line must be 'B i v'", lineno);
      const std::size_t i = parse_index(tok[1], lineno);
      if (i == 0 || i > sys.rows()) throw ParseError("rhs index " + tok[1] + " outside the declared shape", lineno);
      if (!seen_rhs.insert(i).second) throw ParseError("duplicate rhs entry " + tok[1], lineno);
      sys.set_rhs(i, parse_value(tok[2], lineno));
    } else {
      throw ParseError("unknown record '" + tok[0] + "'", lineno);
    }
  }
  if (!have_header) throw ParseError("missing header line");
  return sys;
}

SparseIntSystem read_system_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_system(in);
}

void write_system(std::ostream& out, const SparseIntSystem& sys) {
  out << sys.rows() << ' ' << sys.cols() << ' ' << to_string(sys.class_tag()) << '\n';
  for (std::size_t i = 1; i <= sys.rows(); ++i) {
    for (const auto& [j, v] : sys.row(i)) out << "E " << i << ' ' << j << ' ' << to_string(v) << '\n';
  }
  for (std::size_t i = 1; i <= sys.rows(); ++i) {
    if (sgn(sys.rhs(i)) != 0) out << "B " << i << ' ' << to_string(sys.rhs(i)) << '\n';
  }
}

void write_cert(std::ostream& out, const StageCert& cert) {
  out << "# cert stage=" << to_string(cert.stage) << " n_before=" << cert.n_before << " m_before=" << cert.m_before
      << " n_after=" << cert.n_after << " m_after=" << cert.m_after;
  if (cert.pad_k) out << " pad_k=" << *cert.pad_k;
  out << '\n';
}

std::vector<StageCert> read_certs(std::istream& in) {
  std::vector<StageCert> certs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokens(line);
    if (tok.size() < 2 || tok[0] != "#" || tok[1] != "cert") continue;
    std::map<std::string, std::string> kv;
    for (std::size_t t = 2; t < tok.size(); ++t) {
      const auto eq = tok[t].find('=');
      if (eq == std::string::npos) throw ParseError("malformed cert field '" + tok[t] + "'", lineno);
      kv[tok[t].substr(0, eq)] = tok[t].substr(eq + 1);
    }
    auto field = [&](const std::string& key) {
      auto it = kv.find(key);
      if (it == kv.end()) throw ParseError("cert is missing " + key, lineno);
      return parse_index(it->second, lineno);
    };
    StageCert c;
    if (kv["stage"] == "GtoGz") {
      c.stage = Stage::GtoGz;
    } else if (kv["stage"] == "GzToGz2") {
      c.stage = Stage::GzToGz2;
    } else {
      throw ParseError("unknown cert stage '" + kv["stage"] + "'", lineno);
    }
    c.n_before = field("n_before");
    c.m_before = field("m_before");
    c.n_after = field("n_after");
    c.m_after = field("m_after");
    if (kv.count("pad_k")) c.pad_k = field("pad_k");
    certs.push_back(c);
  }
  return certs;
}

void write_trace(std::ostream& out, const ReductionTrace& trace) {
  out << "trace\n";
  out << "dims n=" << trace.n << " m=" << trace.m << " n_repl=" << trace.n_repl << " n_g=" << trace.n_g
      << " n_x=" << trace.n_x << " n_final=" << trace.n_final << " m_final=" << trace.m_final << '\n';
  out << "stats\n";
  out << "# row sign len entries sum_num_g count_bit[1..len] num_gadget[1..len]\n";
  for (std::size_t i = 0; i < trace.per_row_stats.size(); ++i) {
    for (Sign s : kSigns) {
      const auto& side = trace.per_row_stats[i][s];
      out << "row " << i + 1 << ' ' << sign_char(s) << " len=" << side.len << " entries=" << side.entries
          << " sum_num_g=" << side.sum_num_g << " count_bit=" << join(side.count_bit)
          << " num_gadget=" << join(side.num_gadget) << '\n';
    }
  }
  out << "gadgets\n";
  out << "# ind t t_prime j1 j2 i_src k_src s_src ell\n";
  for (const auto& g : trace.gadgets) {
    out << "gadget " << g.ind << ' ' << g.gadget.t << ' ' << g.gadget.t_prime << ' ' << g.gadget.j1 << ' '
        << g.gadget.j2 << ' ' << g.i_src << ' ' << g.k_src << ' ' << sign_char(g.s_src) << ' ' << g.ell << '\n';
  }
  out << "end\n";
}

}  // namespace mc2red
