#include "qatlas/ideal_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qatlas {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string line_error(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

template <class F>
std::vector<std::string> canonical_generators(const IdealFile& file, const F& field,
                                              const std::vector<std::size_t>& lines) {
  auto ring = Ring<F>::make(file.vars, field, MonomialOrder::grevlex());
  std::vector<std::string> out;
  for (std::size_t i = 0; i < file.generators.size(); ++i) {
    try {
      out.push_back(to_string(parse_polynomial(file.generators[i], ring)));
    } catch (const InputError& e) {
      throw InputError(line_error(lines[i], e.what()));
    }
  }
  return out;
}

template <class F>
Ideal<F> build_ideal(const IdealFile& file, const F& field) {
  auto ring = Ring<F>::make(file.vars, field, MonomialOrder::grevlex());
  std::vector<Polynomial<F>> gens;
  for (const auto& g : file.generators) gens.push_back(parse_polynomial(g, ring));
  return Ideal<F>(ring, std::move(gens));
}

}  // namespace

IdealFile parse_ideal_file(std::string_view text) {
  IdealFile file;
  bool have_field = false, have_vars = false;
  std::vector<std::size_t> gen_lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line[0] == '#') {
      file.comments.push_back(line);
    } else if (line.rfind("field:", 0) == 0) {
      if (have_field) throw InputError(line_error(line_no, "duplicate field line"));
      try {
        file.field = FieldSpec::parse(trim(std::string_view(line).substr(6)));
      } catch (const InputError& e) {
        throw InputError(line_error(line_no, e.what()));
      }
      have_field = true;
    } else if (line.rfind("vars:", 0) == 0) {
      if (have_vars) throw InputError(line_error(line_no, "duplicate vars line"));
      std::istringstream is(line.substr(5));
      for (std::string v; is >> v;) file.vars.push_back(v);
      if (file.vars.empty()) throw InputError(line_error(line_no, "no variables"));
      have_vars = true;
    } else {
      if (!have_field || !have_vars) throw InputError(line_error(line_no, "generator before field and vars lines"));
      file.generators.push_back(line);
      gen_lines.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (!have_field) throw InputError("missing 'field:' line");
  if (!have_vars) throw InputError("missing 'vars:' line");
  if (file.field.is_rational()) {
    file.generators = canonical_generators(file, RationalField(), gen_lines);
  } else {
    file.generators = canonical_generators(file, PrimeField(file.field.modulus), gen_lines);
  }
  return file;
}

std::string format_ideal_file(const IdealFile& file) {
  std::ostringstream os;
  for (const auto& c : file.comments) os << c << "\n";
  os << "field: " << file.field.to_string() << "\n";
  os << "vars:";
  for (const auto& v : file.vars) os << " " << v;
  os << "\n";
  for (const auto& g : file.generators) os << g << "\n";
  return os.str();
}

IdealFile read_ideal_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ideal_file(ss.str());
}

void write_ideal_file(const std::string& path, const IdealFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << format_ideal_file(file);
  if (!out) throw InputError("write failed for " + path);
}

AnyIdeal to_ideal(const IdealFile& file) {
  if (file.field.is_rational()) return build_ideal(file, RationalField());
  return build_ideal(file, PrimeField(file.field.modulus));
}

template <class F>
IdealFile ideal_file_from(const Ideal<F>& ideal, std::vector<std::string> comments) {
  IdealFile file;
  file.comments = std::move(comments);
  if constexpr (F::kIsRational) {
    file.field = FieldSpec::rationals();
  } else {
    file.field = FieldSpec::prime(ideal.ring().field().modulus());
  }
  file.vars = ideal.ring().names();
  auto grevlex = ideal.ring().with_order(MonomialOrder::grevlex());
  for (const auto& g : ideal.generators()) file.generators.push_back(to_string(g.in_ring(grevlex)));
  return file;
}

IdealFile ideal_file_from(const AnyIdeal& ideal, std::vector<std::string> comments) {
  return std::visit([&](const auto& i) { return ideal_file_from(i, std::move(comments)); }, ideal);
}

template IdealFile ideal_file_from(const Ideal<PrimeField>&, std::vector<std::string>);
template IdealFile ideal_file_from(const Ideal<RationalField>&, std::vector<std::string>);

}  // namespace qatlas
