#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phylo {

enum class DatasetKind { Nucleotide, Categorical, Binary };

/// Token that marks a missing locus value for a dataset kind:
/// "-" for nucleotide alignments, "0" for allele numbers and SNP digits.
std::string_view missing_token(DatasetKind kind) noexcept;

struct Profile {
  std::string id;
  std::vector<std::string> loci;
};

/// Immutable set of equally sized allelic profiles with unique ids.
class Dataset {
 public:
  Dataset(std::vector<Profile> profiles, DatasetKind kind);

  const std::vector<Profile>& profiles() const noexcept { return profiles_; }
  const Profile& operator[](std::size_t i) const { return profiles_[i]; }
  std::size_t size() const noexcept { return profiles_.size(); }
  std::size_t locus_count() const noexcept { return locus_count_; }
  DatasetKind kind() const noexcept { return kind_; }
  std::string_view missing() const noexcept { return missing_token(kind_); }

  std::vector<std::string> ids() const;

  /// Locus values interned to integers, one row of locus_count() per profile.
  /// Equal tokens share a code; the missing token is always kMissingCode.
  std::span<const std::uint32_t> codes(std::size_t i) const noexcept {
    return {codes_.data() + i * locus_count_, locus_count_};
  }
  static constexpr std::uint32_t kMissingCode = 0;

 private:
  std::vector<Profile> profiles_;
  std::vector<std::uint32_t> codes_;
  std::size_t locus_count_ = 0;
  DatasetKind kind_;
};

Dataset read_fasta(std::string_view text);
Dataset read_snp(std::string_view text);
/// MLST (with a header line) and MLVA (without) share this reader.
Dataset read_ml(std::string_view text);

}  // namespace phylo
