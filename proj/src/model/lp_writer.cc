// SPDX-License-Identifier: Apache-2.0

#include "pwlmip/model/lp_writer.h"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pwlmip {
namespace {

constexpr int kTermsPerLine = 8;

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string var_name(const Model& model, int index) {
  const auto& name = model.variables()[index].name;
  return name.empty() ? "v" + std::to_string(index) : name;
}

void write_terms(const Model& model, const std::vector<Term>& terms,
                 std::ostream& out) {
  int on_line = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    if (on_line == kTermsPerLine) {
      out << "\n   ";
      on_line = 0;
    }
    const char* sign = t.coeff < 0 ? "-" : "+";
    if (i == 0 && t.coeff >= 0) {
      out << ' ' << format_number(t.coeff);
    } else {
      out << ' ' << sign << ' ' << format_number(std::abs(t.coeff));
    }
    out << ' ' << var_name(model, t.var.index());
    ++on_line;
  }
}

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kGreaterEqual:
      return ">=";
    case Relation::kEqual:
      return "=";
  }
  return "=";
}

}  // namespace

void write_lp(const Model& model, std::ostream& out) {
  out << "\\ pwlmip model: " << model.num_variables() << " variables, "
      << model.num_constraints() << " constraints\n";
  out << (model.sense() == Sense::kMaximize ? "Maximize\n" : "Minimize\n");
  out << " obj:";
  const LinearExpr& obj = model.objective();
  write_terms(model, obj.terms, out);
  if (obj.constant != 0.0 || obj.terms.empty()) {
    if (obj.terms.empty()) {
      out << ' ' << format_number(obj.constant);
    } else {
      out << ' ' << (obj.constant < 0 ? "-" : "+") << ' '
          << format_number(std::abs(obj.constant));
    }
  }
  out << "\nSubject To\n";
  const auto rows = model.constraints();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    out << ' ' << (row.name.empty() ? "c" + std::to_string(i) : row.name)
        << ':';
    if (row.terms.empty()) {
      out << " 0 " << var_name(model, 0);
    } else {
      write_terms(model, row.terms, out);
    }
    out << ' ' << relation_symbol(row.relation) << ' '
        << format_number(row.rhs) << '\n';
  }

  out << "Bounds\n";
  const auto vars = model.variables();
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const Variable& v = vars[j];
    const std::string name = var_name(model, static_cast<int>(j));
    if (v.kind == VarKind::kBinary) {
      if (v.lower == 0.0 && v.upper == 1.0) continue;
    } else if (v.lower == 0.0 && std::isinf(v.upper)) {
      continue;
    }
    if (std::isinf(v.lower) && std::isinf(v.upper)) {
      out << ' ' << name << " free\n";
    } else if (v.lower == v.upper) {
      out << ' ' << name << " = " << format_number(v.lower) << '\n';
    } else {
      out << ' ' << format_number(v.lower) << " <= " << name
          << " <= " << format_number(v.upper) << '\n';
    }
  }

  if (model.num_binaries() > 0) {
    out << "Binaries\n";
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (vars[j].kind == VarKind::kBinary) {
        out << ' ' << var_name(model, static_cast<int>(j)) << '\n';
      }
    }
  }
  out << "End\n";
}

std::string export_lp_text(const Model& model) {
  std::ostringstream out;
  write_lp(model, out);
  return out.str();
}

}  // namespace pwlmip
