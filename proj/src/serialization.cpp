#include "terngold/serialization.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace terngold::io {

namespace {

std::string trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool skippable(const std::string& line) {
  return line.empty() || line[0] == '#';
}

std::int64_t parse_header_int(const std::string& line, const std::string& key) {
  const std::string want = key + "=";
  if (line.rfind(want, 0) != 0) {
    throw std::invalid_argument("expected '" + want + "<int>', got '" + line +
                                "'");
  }
  try {
    std::size_t used = 0;
    const std::string body = line.substr(want.size());
    const std::int64_t v = std::stoll(body, &used);
    if (used != body.size()) throw std::invalid_argument(body);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer in header '" + line + "'");
  }
}

std::vector<Rat> parse_rational_row(const std::string& line, char label) {
  const std::string want = std::string(1, label) + ":";
  if (line.rfind(want, 0) != 0) {
    throw std::invalid_argument("expected '" + want + " r1 r2 ...', got '" +
                                line + "'");
  }
  std::vector<Rat> out;
  std::stringstream ss(line.substr(want.size()));
  std::string token;
  while (ss >> token) out.push_back(parse_rational(token));
  return out;
}

std::string next_content_line(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!skippable(line)) return line;
  }
  throw std::invalid_argument(std::string("unexpected end of input before ") +
                              what);
}

}  // namespace

seq::TripleSequences load_triple_sequences(std::istream& in) {
  const std::int64_t n =
      parse_header_int(next_content_line(in, "the n= header"), "n");
  std::vector<Rat> a = parse_rational_row(next_content_line(in, "row a"), 'a');
  std::vector<Rat> b = parse_rational_row(next_content_line(in, "row b"), 'b');
  std::vector<Rat> c = parse_rational_row(next_content_line(in, "row c"), 'c');
  if (static_cast<std::int64_t>(a.size()) != n ||
      static_cast<std::int64_t>(b.size()) != n ||
      static_cast<std::int64_t>(c.size()) != n) {
    throw std::invalid_argument(
        "row lengths " + std::to_string(a.size()) + "/" +
        std::to_string(b.size()) + "/" + std::to_string(c.size()) +
        " do not match n=" + std::to_string(n));
  }
  return seq::TripleSequences::create(std::move(a), std::move(b),
                                      std::move(c));
}

seq::TripleSequences load_triple_sequences_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open instance file '" + path + "'");
  }
  return load_triple_sequences(in);
}

void save_triple_sequences(std::ostream& out, const seq::TripleSequences& t) {
  out << "n=" << t.n << "\n";
  const char* labels[3] = {"a:", "b:", "c:"};
  const std::vector<Rat>* rows[3] = {&t.a, &t.b, &t.c};
  for (int r = 0; r < 3; ++r) {
    out << labels[r];
    for (const Rat& v : *rows[r]) out << " " << rational_to_string(v);
    out << "\n";
  }
}

mod::ResidueSet parse_residue_set(const std::string& text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string::npos) {
    throw std::invalid_argument("residue set needs 'm=<int>; {...}', got '" +
                                text + "'");
  }
  const std::int64_t m = parse_header_int(trim(text.substr(0, semi)), "m");
  if (m < 1) {
    throw std::invalid_argument("residue-set modulus must be positive");
  }
  std::string rest = trim(text.substr(semi + 1));
  if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}') {
    throw std::invalid_argument("residue set needs braces, got '" + rest +
                                "'");
  }
  rest = rest.substr(1, rest.size() - 2);
  mod::ResidueSet s(m);
  std::stringstream ss(rest);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty()) continue;
    std::int64_t r = 0;
    try {
      std::size_t used = 0;
      r = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad residue '" + token + "'");
    }
    if (r < 0 || r >= m) {
      throw std::invalid_argument("residue " + std::to_string(r) +
                                  " outside [0, " + std::to_string(m) + ")");
    }
    s.insert(r);
  }
  return s;
}

std::string residue_set_to_string(const mod::ResidueSet& s) {
  std::ostringstream out;
  out << "m=" << s.modulus() << "; {";
  bool first = true;
  for (std::int64_t r : s.members()) {
    if (!first) out << ",";
    first = false;
    out << r;
  }
  out << "}";
  return out.str();
}

unitfn::UnitFunction load_unit_function(std::istream& in,
                                        std::vector<std::int64_t>* missing_units) {
  const std::int64_t m =
      parse_header_int(next_content_line(in, "the m= header"), "m");
  const mod::Modulus modulus = m % 2 == 0 ? mod::analyze_modulus_relaxed(m)
                                          : mod::analyze_modulus(m);
  unitfn::UnitFunction f(modulus, Rat(0));
  std::vector<bool> seen(static_cast<std::size_t>(f.size()), false);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (skippable(line)) continue;
    std::stringstream ss(line);
    std::string tag, unit_text, value_text;
    if (!(ss >> tag >> unit_text >> value_text) || tag != "u") {
      throw std::invalid_argument("expected 'u <unit> <p/q>', got '" + line +
                                  "'");
    }
    std::string extra;
    if (ss >> extra) {
      throw std::invalid_argument("trailing tokens on line '" + line + "'");
    }
    std::int64_t unit = 0;
    try {
      std::size_t used = 0;
      unit = std::stoll(unit_text, &used);
      if (used != unit_text.size()) throw std::invalid_argument(unit_text);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad unit '" + unit_text + "'");
    }
    try {
      f.set_value(unit, parse_rational(value_text));  // validates unit + range
    } catch (const std::domain_error& e) {
      throw std::invalid_argument(std::string(e.what()) + " on line '" + line +
                                  "'");
    }
    seen[static_cast<std::size_t>(f.index_of(unit))] = true;
  }
  if (missing_units) {
    missing_units->clear();
    for (std::int64_t i = 0; i < f.size(); ++i) {
      if (!seen[static_cast<std::size_t>(i)]) {
        missing_units->push_back(f.unit_list()[static_cast<std::size_t>(i)]);
      }
    }
  }
  return f;
}

unitfn::UnitFunction load_unit_function_file(const std::string& path,
                                             std::vector<std::int64_t>* missing_units) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open function file '" + path + "'");
  }
  return load_unit_function(in, missing_units);
}

void save_unit_function(std::ostream& out, const unitfn::UnitFunction& f) {
  out << "m=" << f.m() << "\n";
  for (std::int64_t i = 0; i < f.size(); ++i) {
    out << "u " << f.unit_list()[static_cast<std::size_t>(i)] << " "
        << rational_to_string(f.value_at(i)) << "\n";
  }
}

std::vector<double> load_real_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open vector file '" + path + "'");
  }
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    if (token[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    try {
      std::size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number '" + token + "'");
    }
  }
  return out;
}

}  // namespace terngold::io
