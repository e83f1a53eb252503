#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "json.hpp"
#include "terngold/counting.hpp"
#include "terngold/rational.hpp"

namespace terngold::report {

enum class Format { Jsonl, Csv, Human };

// "jsonl" | "csv" | "human"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& s);

// The shared record schema: one object per run/result with the fixed key
// set {op, params, status, witness, margin, scanned, seed, elapsed_ms}.
// Fields a subcommand has nothing to say about stay null.  nlohmann keeps
// object keys sorted, so serialized records are byte-stable.
nlohmann::json make_record(const std::string& op);

// Rationals always travel as canonical "p" / "p/q" strings.
nlohmann::json rat_json(const Rat& value);

// One line, no spaces, trailing newline.
std::string to_jsonl(const nlohmann::json& record);

// `key = value` lines (params flattened), nulls skipped, blank line after.
void write_human(std::ostream& out, const nlohmann::json& record);

// `n,count,method,ms` rows.
void write_counts_csv_header(std::ostream& out);
void write_counts_csv(std::ostream& out, const count::RangeReport& rep);
void write_count_csv(std::ostream& out, const count::SingleCount& one);

// Output target: a file path, or stdout when the path is empty.
class Sink {
 public:
  Sink(const std::string& path, Format format);
  ~Sink();
  Format format() const { return format_; }
  std::ostream& stream();
  void record(const nlohmann::json& rec);  // jsonl or human formats

 private:
  Format format_;
  std::unique_ptr<std::ostream> owned_;
  std::ostream* out_;
};

}  // namespace terngold::report
