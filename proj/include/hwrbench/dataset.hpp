#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hwrbench/run_record.hpp"

namespace hwrbench {

// A row whose score was "N/A" in the source table.
struct CoverageNote {
  std::string algorithm;
  GameId game;
  std::string reason;
};

struct Dataset {
  std::string label;
  std::vector<RunRecord> records;
  std::vector<CoverageNote> omitted;

  // Algorithm names in order of first appearance (records and omitted rows).
  std::vector<std::string> algorithms() const;
};

// Comma-separated text with header algorithm,game,score,frames,scale_label.
// The literal "N/A" is allowed in score and yields a coverage note instead of
// a record. Throws DataError on duplicate (algorithm, game) pairs, unknown
// games, non-numeric scores and non-integral or zero frame counts.
Dataset parse_dataset(std::istream& in, std::string_view source_name, std::string label);
// Label defaults to the file stem.
Dataset load_dataset(const std::filesystem::path& path);

void write_dataset_csv(const Dataset& dataset, std::ostream& out);

}  // namespace hwrbench
