#pragma once

#include <filesystem>
#include <string>

#include "koopman/field.hpp"

namespace koopman {

// Binary snapshot format, magic "KWPH".
// 32-byte header: magic[4], version u16, kind u8 (0 = complex scalar field,
// 1 = matrix field), dim u8, nq u32, np u32, 16 reserved zero bytes.
// Payload: little-endian float64 (re, im) pairs, row-major over nodes
// (q outer); matrix fields store node-major blocks, row-major n x n within.
inline constexpr std::uint16_t kSnapshotVersion = 1;

void write_snapshot(const std::filesystem::path& path, const ComplexField& f);
void write_snapshot(const std::filesystem::path& path, const MatrixField& f);
void write_snapshot(const std::filesystem::path& path, const RealField& f);

struct SnapshotData {
  std::uint16_t version;
  std::uint8_t kind;
  std::uint8_t dim;
  std::uint32_t nq, np;
  std::vector<cplx> data;
};

SnapshotData read_snapshot_raw(const std::filesystem::path& path);
ComplexField read_complex_snapshot(const std::filesystem::path& path,
                                   const GridPtr& grid);
MatrixField read_matrix_snapshot(const std::filesystem::path& path,
                                 const GridPtr& grid);
RealField read_real_snapshot(const std::filesystem::path& path,
                             const GridPtr& grid);

// Plain-text export, one "q,p,re,im" row per node.  Meant for small grids.
void export_csv(const std::filesystem::path& path, const ComplexField& f);

}  // namespace koopman
