#pragma once

#include "mc2red/pair_replace.hpp"
#include "mc2red/reductions.hpp"
#include "mc2red/sparse_system.hpp"

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace mc2red {

// Matrix text format, 1-based indices:
//
//   m n class_tag
//   E i j v        one line per nonzero entry
//   B i v          one line per nonzero right-hand side entry
//   # ...          comment
//
// Values are decimal integers of any size. Zero values are accepted and dropped.

/// Throws ParseError.
SparseIntSystem read_system(std::istream& in);
SparseIntSystem read_system_file(const std::filesystem::path& path);

/// Header, entries in row-major order, then rhs entries.
void write_system(std::ostream& out, const SparseIntSystem& sys);

/// `# cert stage=<GtoGz|GzToGz2> n_before=.. m_before=.. n_after=.. m_after=.. [pad_k=..]`
void write_cert(std::ostream& out, const StageCert& cert);
/// Collects every `# cert` comment line of a matrix file.
std::vector<StageCert> read_certs(std::istream& in);

/// Companion trace file: dims, per-row statistics, one line per gadget.
void write_trace(std::ostream& out, const ReductionTrace& trace);

}  // namespace mc2red
