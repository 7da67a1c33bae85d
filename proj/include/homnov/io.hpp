#pragma once

// JSON document format for algebras and deformations: parsing with
// field-path diagnostics, canonical emission, and binding of sparse
// deformation terms to a concrete algebra.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homnov/deformation.hpp"
#include "homnov/superalgebra.hpp"

namespace homnov {

// In-memory form of an algebra file: the algebra itself plus optional
// attachments (a bilinear form, named linear self-maps, scalars).
struct AlgebraDocument {
    AlgebraPtr algebra;
    std::optional<BilinearForm> form;
    std::map<std::string, EvenMap> maps;
    std::optional<Rat> weight;
    std::optional<Rat> xi;
};

// One sparse structure-constant entry: the coefficient of e_k in the
// product (or term value) at slot (e_i, e_j).
struct TensorEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Rat c;
};

// In-memory form of a deformation file.  Entries are checked against a
// concrete algebra (index ranges, parities) only in bind_deformation.
struct DeformationDocument {
    std::size_t order = 0;
    std::vector<std::vector<TensorEntry>> terms;
};

// Parse UTF-8 JSON text.  All diagnostics are InputErrors naming the
// offending field path (e.g. "mul[3].c"); rational literals are strings
// "p" / "p/q" or plain JSON integers, never floats.
AlgebraDocument parse_algebra_document(const std::string& text);
DeformationDocument parse_deformation_document(const std::string& text);

// Canonical emission: entries sorted by (i, j, k), zero coefficients
// omitted, rationals in lowest terms.  Output parses back to an equal
// document.
std::string emit_algebra_document(const AlgebraDocument& doc);
std::string emit_deformation_document(const DeformationDocument& doc);

// Interpret the document's terms over the given algebra.
TruncatedDeformation bind_deformation(const DeformationDocument& doc,
                                      const AlgebraPtr& algebra);

// Sparse re-encoding of a deformation's terms.
DeformationDocument deformation_document(const TruncatedDeformation& d);

} // namespace homnov
