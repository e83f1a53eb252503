#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "terngold/modulus.hpp"
#include "terngold/residue_set.hpp"
#include "terngold/sequences.hpp"
#include "terngold/unit_function.hpp"

namespace terngold::io {

// Line-oriented text forms.  Loaders throw std::invalid_argument with a
// message naming the offending line; writers emit the canonical form the
// loaders accept.

// header `n=<int>`, then `a: r1 r2 ...`, `b: ...`, `c: ...` with rationals
// as `p/q` or integers.  Blank lines and lines starting with '#' skipped.
seq::TripleSequences load_triple_sequences(std::istream& in);
seq::TripleSequences load_triple_sequences_file(const std::string& path);
void save_triple_sequences(std::ostream& out, const seq::TripleSequences& t);

// `m=<int>; {r1,r2,...}`
mod::ResidueSet parse_residue_set(const std::string& text);
std::string residue_set_to_string(const mod::ResidueSet& s);

// header `m=<int>`, then lines `u <unit> <p/q>`.  Units not mentioned stay
// at 0; their labels are returned through missing_units when requested.
unitfn::UnitFunction load_unit_function(std::istream& in,
                                        std::vector<std::int64_t>* missing_units = nullptr);
unitfn::UnitFunction load_unit_function_file(const std::string& path,
                                             std::vector<std::int64_t>* missing_units = nullptr);
void save_unit_function(std::ostream& out, const unitfn::UnitFunction& f);

// whitespace-separated real numbers (for spectra)
std::vector<double> load_real_vector_file(const std::string& path);

}  // namespace terngold::io
