#include "koopman/snapshot.hpp"

#include <array>
#include <cstring>
#include <fstream>

namespace koopman {

namespace {

constexpr char kMagic[4] = {'K', 'W', 'P', 'H'};

// Header and payload are written in host byte order; the format is defined
// little-endian and this library targets little-endian hosts only.
static_assert(std::endian::native == std::endian::little,
              "snapshot format requires a little-endian host");

void write_header(std::ofstream& out, std::uint8_t kind, std::uint8_t dim,
                  std::uint32_t nq, std::uint32_t np) {
  std::array<char, 32> header{};
  std::memcpy(header.data(), kMagic, 4);
  const std::uint16_t version = kSnapshotVersion;
  std::memcpy(header.data() + 4, &version, 2);
  header[6] = static_cast<char>(kind);
  header[7] = static_cast<char>(dim);
  std::memcpy(header.data() + 8, &nq, 4);
  std::memcpy(header.data() + 12, &np, 4);
  out.write(header.data(), header.size());
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  return out;
}

void write_payload(std::ofstream& out, const std::vector<cplx>& data) {
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size() * sizeof(cplx)));
  if (!out) throw std::runtime_error("snapshot write failed");
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const ComplexField& f) {
  auto out = open_out(path);
  write_header(out, 0, 1, f.grid()->nq(), f.grid()->np());
  write_payload(out, f.data());
}

void write_snapshot(const std::filesystem::path& path, const MatrixField& f) {
  auto out = open_out(path);
  write_header(out, 1, static_cast<std::uint8_t>(f.dim()), f.grid()->nq(),
               f.grid()->np());
  write_payload(out, f.data());
}

void write_snapshot(const std::filesystem::path& path, const RealField& f) {
  write_snapshot(path, f.to_complex());
}

SnapshotData read_snapshot_raw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open snapshot: " + path.string());
  std::array<char, 32> header{};
  in.read(header.data(), header.size());
  if (!in || std::memcmp(header.data(), kMagic, 4) != 0)
    throw std::runtime_error("not a KWPH snapshot: " + path.string());
  SnapshotData s;
  std::memcpy(&s.version, header.data() + 4, 2);
  if (s.version != kSnapshotVersion)
    throw std::runtime_error("unsupported snapshot version in " + path.string());
  s.kind = static_cast<std::uint8_t>(header[6]);
  s.dim = static_cast<std::uint8_t>(header[7]);
  std::memcpy(&s.nq, header.data() + 8, 4);
  std::memcpy(&s.np, header.data() + 12, 4);
  const std::size_t count = static_cast<std::size_t>(s.nq) * s.np *
                            (s.kind == 1 ? s.dim * s.dim : 1);
  s.data.resize(count);
  in.read(reinterpret_cast<char*>(s.data.data()),
          static_cast<std::streamsize>(count * sizeof(cplx)));
  if (!in) throw std::runtime_error("truncated snapshot: " + path.string());
  return s;
}

ComplexField read_complex_snapshot(const std::filesystem::path& path,
                                   const GridPtr& grid) {
  SnapshotData s = read_snapshot_raw(path);
  if (s.kind != 0)
    throw std::runtime_error("snapshot is not a scalar field: " + path.string());
  if (s.nq != static_cast<std::uint32_t>(grid->nq()) ||
      s.np != static_cast<std::uint32_t>(grid->np()))
    throw MismatchError("snapshot grid size differs from target grid");
  return ComplexField(grid, std::move(s.data));
}

MatrixField read_matrix_snapshot(const std::filesystem::path& path,
                                 const GridPtr& grid) {
  SnapshotData s = read_snapshot_raw(path);
  if (s.kind != 1)
    throw std::runtime_error("snapshot is not a matrix field: " + path.string());
  if (s.nq != static_cast<std::uint32_t>(grid->nq()) ||
      s.np != static_cast<std::uint32_t>(grid->np()))
    throw MismatchError("snapshot grid size differs from target grid");
  MatrixField out(grid, s.dim);
  out.data() = std::move(s.data);
  return out;
}

RealField read_real_snapshot(const std::filesystem::path& path,
                             const GridPtr& grid) {
  ComplexField c = read_complex_snapshot(path, grid);
  RealField out(grid);
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].real();
  return out;
}

void export_csv(const std::filesystem::path& path, const ComplexField& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << "q,p,re,im\n";
  out.precision(17);
  const auto& g = *f.grid();
  for (int iq = 0; iq < g.nq(); ++iq)
    for (int ip = 0; ip < g.np(); ++ip) {
      const cplx v = f.at(iq, ip);
      out << g.q(iq) << ',' << g.p(ip) << ',' << v.real() << ',' << v.imag()
          << '\n';
    }
}

}  // namespace koopman
