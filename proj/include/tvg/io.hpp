#pragma once

#include <cstdint>
#include <string>

#include "tvg/hunt.hpp"
#include "tvg/tverberg.hpp"

namespace tvg {

inline constexpr const char* kToolName = "tvg";
inline constexpr const char* kToolVersion = "0.1.0";

/* Point files: JSON {"dim": d, "points": [[...], ...]} or CSV with one
 * point per row (an optional non-numeric first row is treated as a header).
 * The reader sniffs the format from the content. */
PointSet read_point_file(const std::string& path);
PointSet parse_points_json(const std::string& text);
PointSet parse_points_csv(const std::string& text);

/* Matching files: JSON {"edges": [[i, j], ...]}, validated against n. */
Matching read_matching_file(const std::string& path, int n);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/* %.17g rendering used wherever doubles become text deterministically. */
std::string fmt17(double v);

/* FNV-1a 64-bit digest of a canonical rendering of dim + coordinates;
 * reproducibility bookkeeping for certificate documents. */
std::uint64_t fnv1a64(const std::string& bytes);
std::string point_set_digest(const PointSet& ps);

/* Certificate document: JSON with the input digest, the graph edges, the
 * classification, witness, value, depth, per-edge slacks, solver
 * diagnostics, and tool version.  Doubles round-trip losslessly.  `dots`
 * may be empty (minimizing path) or carry the per-edge dot products
 * (tree witness path). */
std::string certificate_document(const PointSet& ps, const std::vector<Edge>& edges,
                                 const std::string& graph_kind, const std::string& method,
                                 const TverbergCertificate& cert,
                                 const std::vector<double>& dots = {});

/* Hunt report as deterministic JSON. */
std::string report_document(const HuntReport& report);

/* SVG rendering of a planar configuration: induced discs, edges, points,
 * the witness marker, and the circle of radius `value` about the witness
 * when value >= 0.  Coordinates are padded by 10% and the vertical axis is
 * flipped into SVG convention.  Fully deterministic.  cert may be null. */
std::string render_svg(const PointSet& ps, const std::vector<Edge>& edges,
                       const TverbergCertificate* cert);

} // namespace tvg
