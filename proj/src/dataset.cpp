#include "phylo/dataset.hpp"

#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "phylo/error.hpp"
#include "phylo/text.hpp"

namespace phylo {

std::string_view missing_token(DatasetKind kind) noexcept {
  return kind == DatasetKind::Nucleotide ? "-" : "0";
}

Dataset::Dataset(std::vector<Profile> profiles, DatasetKind kind)
    : profiles_(std::move(profiles)), kind_(kind) {
  if (profiles_.empty()) fail(ErrorKind::ParseFailure, "dataset has no profiles");
  locus_count_ = profiles_.front().loci.size();
  std::unordered_set<std::string_view> seen;
  for (const auto& p : profiles_) {
    if (p.loci.size() != locus_count_)
      fail(ErrorKind::ParseFailure, "profile '" + p.id + "' has " + std::to_string(p.loci.size()) +
                                        " loci, expected " + std::to_string(locus_count_));
    if (!seen.insert(p.id).second) fail(ErrorKind::ParseFailure, "duplicate profile id '" + p.id + "'");
  }
  std::unordered_map<std::string_view, std::uint32_t> table{{missing(), kMissingCode}};
  codes_.reserve(profiles_.size() * locus_count_);
  for (const auto& p : profiles_)
    for (const auto& token : p.loci) {
      auto [it, inserted] = table.try_emplace(token, static_cast<std::uint32_t>(table.size()));
      codes_.push_back(it->second);
    }
}

std::vector<std::string> Dataset::ids() const {
  std::vector<std::string> out;
  out.reserve(profiles_.size());
  for (const auto& p : profiles_) out.push_back(p.id);
  return out;
}

Dataset read_fasta(std::string_view input) {
  std::vector<Profile> profiles;
  bool has_sequence = false;
  for (auto raw : text::lines(input)) {
    auto line = text::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '>') {
      if (!profiles.empty() && !has_sequence)
        fail(ErrorKind::ParseFailure, "FASTA header '" + profiles.back().id + "' has no sequence");
      profiles.push_back({std::string(text::trim(line.substr(1))), {}});
      has_sequence = false;
      continue;
    }
    if (profiles.empty()) fail(ErrorKind::ParseFailure, "FASTA sequence data before the first '>' header");
    for (char c : line) {
      if (c == ' ' || c == '\t') continue;
      profiles.back().loci.emplace_back(1, static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    has_sequence = true;
  }
  if (profiles.empty()) fail(ErrorKind::ParseFailure, "empty FASTA input");
  if (!has_sequence) fail(ErrorKind::ParseFailure, "FASTA header '" + profiles.back().id + "' has no sequence");
  return Dataset(std::move(profiles), DatasetKind::Nucleotide);
}

Dataset read_snp(std::string_view input) {
  std::vector<Profile> profiles;
  std::size_t line_no = 0;
  for (auto line : text::lines(input)) {
    ++line_no;
    auto cols = text::fields(line);
    if (cols.empty()) continue;
    if (cols.size() < 2)
      fail(ErrorKind::ParseFailure, "SNP line " + std::to_string(line_no) + ": expected an id followed by 0/1 values");
    Profile p{std::string(cols[0]), {}};
    for (std::size_t k = 1; k < cols.size(); ++k) {
      for (char c : cols[k]) {
        if (c != '0' && c != '1')
          fail(ErrorKind::ParseFailure,
               "SNP line " + std::to_string(line_no) + ": invalid character '" + std::string(1, c) + "'");
        p.loci.emplace_back(1, c);
      }
    }
    profiles.push_back(std::move(p));
  }
  if (profiles.empty()) fail(ErrorKind::ParseFailure, "empty SNP input");
  return Dataset(std::move(profiles), DatasetKind::Binary);
}

Dataset read_ml(std::string_view input) {
  std::vector<Profile> profiles;
  bool first = true;
  std::size_t width = 0;
  std::size_t line_no = 0;
  for (auto line : text::lines(input)) {
    ++line_no;
    auto cols = text::fields(line);
    if (cols.empty()) continue;
    if (first) {
      first = false;
      bool header = false;
      for (std::size_t k = 1; k < cols.size(); ++k)
        if (!text::is_unsigned_integer(cols[k])) header = true;
      width = cols.size();
      if (header) continue;
    }
    if (cols.size() != width)
      fail(ErrorKind::ParseFailure, "ML line " + std::to_string(line_no) + ": has " + std::to_string(cols.size()) +
                                        " columns, expected " + std::to_string(width));
    Profile p{std::string(cols[0]), {}};
    for (std::size_t k = 1; k < cols.size(); ++k) p.loci.emplace_back(cols[k]);
    profiles.push_back(std::move(p));
  }
  if (profiles.empty()) fail(ErrorKind::ParseFailure, "ML input has no profiles");
  return Dataset(std::move(profiles), DatasetKind::Categorical);
}

}  // namespace phylo
