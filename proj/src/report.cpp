#include "terngold/report.hpp"

#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>

namespace terngold::report {

Format parse_format(const std::string& s) {
  if (s == "jsonl") return Format::Jsonl;
  if (s == "csv") return Format::Csv;
  if (s == "human") return Format::Human;
  throw std::invalid_argument("unknown format '" + s +
                              "' (expected jsonl, csv, or human)");
}

nlohmann::json make_record(const std::string& op) {
  nlohmann::json rec;
  rec["op"] = op;
  rec["params"] = nlohmann::json::object();
  rec["status"] = nullptr;
  rec["witness"] = nullptr;
  rec["margin"] = nullptr;
  rec["scanned"] = nullptr;
  rec["seed"] = nullptr;
  rec["elapsed_ms"] = nullptr;
  return rec;
}

nlohmann::json rat_json(const Rat& value) {
  return rational_to_string(value);
}

std::string to_jsonl(const nlohmann::json& record) {
  return record.dump() + "\n";
}

namespace {

void write_human_value(std::ostream& out, const std::string& key,
                       const nlohmann::json& v) {
  if (v.is_null()) return;
  out << key << " = " << (v.is_string() ? v.get<std::string>() : v.dump())
      << "\n";
}

}  // namespace

void write_human(std::ostream& out, const nlohmann::json& record) {
  for (const auto& [key, value] : record.items()) {
    if (value.is_object()) {
      for (const auto& [pk, pv] : value.items()) {
        write_human_value(out, key + "." + pk, pv);
      }
      continue;
    }
    write_human_value(out, key, value);
  }
  out << "\n";
}

void write_counts_csv_header(std::ostream& out) { out << "n,count,method,ms\n"; }

void write_counts_csv(std::ostream& out, const count::RangeReport& rep) {
  // per-row timing is not measured separately; the total is attributed to
  // the last row and the others carry 0 so the column still sums correctly
  for (std::size_t i = 0; i < rep.counts.size(); ++i) {
    const std::int64_t n = rep.n0 + 2 * static_cast<std::int64_t>(i);
    const double ms = i + 1 == rep.counts.size() ? rep.ms : 0.0;
    out << n << "," << rep.counts[i] << "," << to_string(rep.method) << ","
        << ms << "\n";
  }
}

void write_count_csv(std::ostream& out, const count::SingleCount& one) {
  out << one.n << "," << one.count << "," << to_string(one.method) << ","
      << one.ms << "\n";
}

Sink::Sink(const std::string& path, Format format) : format_(format) {
  if (path.empty()) {
    out_ = &std::cout;
    return;
  }
  auto file = std::make_unique<std::ofstream>(path);
  if (!*file) {
    throw std::invalid_argument("cannot open output file '" + path + "'");
  }
  owned_ = std::move(file);
  out_ = owned_.get();
}

Sink::~Sink() = default;

std::ostream& Sink::stream() { return *out_; }

void Sink::record(const nlohmann::json& rec) {
  if (format_ == Format::Human) {
    write_human(*out_, rec);
  } else {
    *out_ << to_jsonl(rec);
  }
  out_->flush();
}

}  // namespace terngold::report
