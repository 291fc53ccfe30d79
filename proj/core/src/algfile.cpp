#include "abspec/algfile.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "abspec/builders.hpp"

namespace abspec {

namespace {

// one whitespace- and comma-separated token list per line, '#' to end of line
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int parse_int(const std::string& tok, int line) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw parse_error("expected a number, got '" + tok + "'", line);
  }
  if (pos != tok.size()) throw parse_error("expected a number, got '" + tok + "'", line);
  return v;
}

std::vector<std::vector<int>> read_semigroup_table(const std::string& path, int line) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open semigroup table '" + path + "'", line);
  int n = 0;
  if (!(in >> n) || n < 1) throw parse_error("semigroup table needs a leading size", line);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(in >> table[a][b]))
        throw parse_error("semigroup table is shorter than its size claims", line);
  return table;
}

Algebra run_builder(const std::vector<std::string>& toks, int line,
                    const std::string& dir) {
  try {
    if (toks[0] == "ring") {
      if (toks.size() != 2) throw parse_error("usage: ring <n>", line);
      return ring_algebra(parse_int(toks[1], line));
    }
    if (toks[0] == "semigroup") {
      if (toks.size() != 2) throw parse_error("usage: semigroup <table file>", line);
      return semigroup_algebra(read_semigroup_table(dir + "/" + toks[1], line));
    }
    // lattice <kind> <param>
    if (toks.size() != 3) throw parse_error("usage: lattice <chain|powerset|divisors> <n>", line);
    int param = parse_int(toks[2], line);
    Algebra alg;
    if (toks[1] == "chain") {
      alg = lattice_algebra(chain_lattice(param), false);
      alg.carrier.names = chain_names(param);
    } else if (toks[1] == "powerset") {
      alg = lattice_algebra(powerset_lattice(param), false);
      alg.carrier.names = powerset_names(param);
    } else if (toks[1] == "divisors") {
      alg = lattice_algebra(divisor_lattice(param), false);
      alg.carrier.names.clear();
      for (int d = 1; d <= param; ++d)
        if (param % d == 0) alg.carrier.names.push_back(std::to_string(d));
    } else {
      throw parse_error("unknown lattice kind '" + toks[1] + "'", line);
    }
    return alg;
  } catch (const input_error& e) {
    throw parse_error(e.what(), line);
  } catch (const capacity_error& e) {
    throw parse_error(e.what(), line);
  }
}

}  // namespace

Algebra parse_algebra(const std::string& text, const std::string& dir) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  int carrier_size = -1;
  int carrier_line = 0;
  std::vector<std::string> names;
  std::string xi0_name, xi1_name;
  int xi0_line = 0, xi1_line = 0;
  struct Entry {
    bool times;
    std::string a, b;
    std::vector<std::string> value;
    int line;
  };
  std::vector<Entry> entries;
  bool saw_table_line = false;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];

    if (kw == "ring" || kw == "lattice" || kw == "semigroup") {
      if (saw_table_line || carrier_size >= 0)
        throw parse_error("builder directives exclude explicit tables", lineno);
      Algebra alg = run_builder(toks, lineno, dir);
      // nothing may follow a builder directive
      while (std::getline(in, line)) {
        ++lineno;
        if (!tokens_of(line).empty())
          throw parse_error("unexpected content after a builder directive", lineno);
      }
      alg.validate();
      return alg;
    }

    if (kw == "carrier") {
      if (carrier_size >= 0) throw parse_error("duplicate carrier line", lineno);
      if (toks.size() != 2) throw parse_error("usage: carrier <n>", lineno);
      carrier_size = parse_int(toks[1], lineno);
      if (carrier_size < 1 || carrier_size > 64)
        throw parse_error("carrier size must be between 1 and 64", lineno);
      carrier_line = lineno;
      continue;
    }
    saw_table_line = true;
    if (kw == "names") {
      if (!names.empty()) throw parse_error("duplicate names line", lineno);
      names.assign(toks.begin() + 1, toks.end());
      if (names.empty()) throw parse_error("names line lists no names", lineno);
      continue;
    }
    if (kw == "xi0" || kw == "xi1") {
      if (toks.size() != 2) throw parse_error("usage: " + kw + " <name>", lineno);
      std::string& slot = kw == "xi0" ? xi0_name : xi1_name;
      int& slot_line = kw == "xi0" ? xi0_line : xi1_line;
      if (slot_line) throw parse_error("duplicate " + kw + " line", lineno);
      slot = toks[1];
      slot_line = lineno;
      continue;
    }
    if (kw == "times" || kw == "plus") {
      // times a b = { x y }
      if (toks.size() < 5 || toks[3] != "=" || toks[4] != "{" || toks.back() != "}")
        throw parse_error("usage: " + kw + " <a> <b> = { <names> }", lineno);
      Entry e;
      e.times = kw == "times";
      e.a = toks[1];
      e.b = toks[2];
      e.value.assign(toks.begin() + 5, toks.end() - 1);
      e.line = lineno;
      entries.push_back(std::move(e));
      continue;
    }
    throw parse_error("unknown keyword '" + kw + "'", lineno);
  }

  if (carrier_size < 0) throw parse_error("missing carrier", lineno ? lineno : 1);

  Algebra alg;
  alg.carrier.size = carrier_size;
  if (names.empty()) {
    alg.carrier.names = make_carrier(carrier_size).names;
  } else {
    if (static_cast<int>(names.size()) != carrier_size)
      throw parse_error("names line disagrees with the carrier size", carrier_line);
    alg.carrier.names = names;
  }
  auto lookup = [&](const std::string& nm, int at) {
    int i = alg.carrier.index_of(nm);
    if (i < 0) throw parse_error("undeclared element '" + nm + "'", at);
    return i;
  };
  if (xi0_line) alg.carrier.xi0 = lookup(xi0_name, xi0_line);
  if (xi1_line) alg.carrier.xi1 = lookup(xi1_name, xi1_line);

  alg.times = MultiOp(carrier_size);
  alg.plus = MultiOp(carrier_size);
  std::set<std::tuple<bool, int, int>> seen;
  for (const Entry& e : entries) {
    int a = lookup(e.a, e.line), b = lookup(e.b, e.line);
    if (!seen.insert({e.times, a, b}).second)
      throw parse_error("duplicate entry for " + std::string(e.times ? "times " : "plus ") +
                        e.a + " " + e.b, e.line);
    ElemSet v;
    for (const std::string& nm : e.value) v.add(lookup(nm, e.line));
    (e.times ? alg.times : alg.plus).set(a, b, v);
  }
  try {
    alg.validate();
  } catch (const error& e) {
    throw parse_error(e.what(), carrier_line);
  }
  return alg;
}

Algebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string dir = ".";
  if (auto slash = path.find_last_of('/'); slash != std::string::npos)
    dir = path.substr(0, slash);
  return parse_algebra(buf.str(), dir);
}

std::string serialize_algebra(const Algebra& alg) {
  std::ostringstream out;
  out << "carrier " << alg.size() << "\n";
  out << "names";
  for (const auto& nm : alg.carrier.names) out << " " << nm;
  out << "\n";
  if (alg.carrier.xi0) out << "xi0 " << alg.carrier.names[*alg.carrier.xi0] << "\n";
  if (alg.carrier.xi1) out << "xi1 " << alg.carrier.names[*alg.carrier.xi1] << "\n";
  // every nonempty ordered entry, row-major; the parser never symmetrizes,
  // so both orders must appear for the round trip to be exact
  auto dump_op = [&](const MultiOp& op, const char* kw) {
    for (int a = 0; a < alg.size(); ++a)
      for (int b = 0; b < alg.size(); ++b) {
        ElemSet v = op.at(a, b);
        if (v.is_empty()) continue;
        out << kw << " " << alg.carrier.names[a] << " " << alg.carrier.names[b] << " = {";
        bool first = true;
        for_each(v, [&](int i) {
          out << (first ? " " : ", ") << alg.carrier.names[i];
          first = false;
        });
        out << " }\n";
      }
  };
  dump_op(alg.times, "times");
  dump_op(alg.plus, "plus");
  return out.str();
}

}  // namespace abspec
