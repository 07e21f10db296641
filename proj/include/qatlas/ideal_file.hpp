#ifndef QATLAS_IDEAL_FILE_HPP
#define QATLAS_IDEAL_FILE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qatlas/constructors.hpp"
#include "qatlas/poly_io.hpp"

namespace qatlas {

// Text format, one item per line:
//
//   # free-form comment (any number, kept in order)
//   field: GF(32003)        or  field: Q
//   vars: x0 x1 x2 x3
//   x0*x2 + x1*x3           one generator per line, polynomial grammar
//
// Blank lines are ignored. Writing emits comments first, then the field and
// variable lines, then the generators in canonical form, so a canonical file
// survives a read/write round trip byte for byte.
struct IdealFile {
  std::vector<std::string> comments;  // full lines including '#'
  FieldSpec field;
  std::vector<std::string> vars;
  std::vector<std::string> generators;  // canonical text

  bool operator==(const IdealFile&) const = default;
};

/// Throws InputError naming the offending line.
IdealFile parse_ideal_file(std::string_view text);
std::string format_ideal_file(const IdealFile& file);

IdealFile read_ideal_file(const std::string& path);
void write_ideal_file(const std::string& path, const IdealFile& file);

AnyIdeal to_ideal(const IdealFile& file);

template <class F>
IdealFile ideal_file_from(const Ideal<F>& ideal, std::vector<std::string> comments = {});

IdealFile ideal_file_from(const AnyIdeal& ideal, std::vector<std::string> comments = {});

}  // namespace qatlas

#endif
