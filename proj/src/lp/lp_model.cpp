#include "lp/lp_model.hpp"

#include <sstream>

#include "core/model.hpp"

namespace cistkit {

namespace {

std::string xvar(int j, int p) {
  return "x_" + std::to_string(j) + "_" + std::to_string(p);
}
std::string kvar(int p) { return "k_" + std::to_string(p); }
std::string vvar(int p) { return "v_" + std::to_string(p); }

// Common core: one color per vertex plus binary declarations for the
// x variables. c = number of candidate colors.
void add_one_color_per_vertex(LpModel& lp, int n, int c) {
  for (int j = 1; j <= n; j++) {
    LpConstraint con;
    con.name = "one_" + std::to_string(j);
    for (int p = 1; p <= c; p++) con.terms.push_back({1, xvar(j, p)});
    con.relation = LpRelation::Eq;
    con.rhs = 1;
    lp.constraints.push_back(std::move(con));
  }
}

void declare_x(LpModel& lp, int n, int c) {
  for (int j = 1; j <= n; j++)
    for (int p = 1; p <= c; p++) lp.binaries.push_back(xvar(j, p));
}

}  // namespace

LpModel panchromatic_lp(const Hypergraph& h) {
  validate(h);
  const int n = h.n, m = h.m(), c = h.n;
  LpModel lp;
  lp.maximize = true;
  for (int p = 1; p <= c; p++) lp.objective.push_back({1, kvar(p)});
  for (int j = 1; j <= n; j++)
    for (int p = 1; p <= c; p++) {
      LpConstraint con;
      con.name = "link_" + std::to_string(j) + "_" + std::to_string(p);
      con.terms = {{1, xvar(j, p)}, {-1, kvar(p)}};
      con.relation = LpRelation::Le;
      con.rhs = 0;
      lp.constraints.push_back(std::move(con));
    }
  add_one_color_per_vertex(lp, n, c);
  for (int i = 1; i <= m; i++)
    for (int p = 1; p <= c; p++) {
      LpConstraint con;
      con.name = "cover_" + std::to_string(i) + "_" + std::to_string(p);
      for (Vertex v : h.edges[i - 1]) con.terms.push_back({1, xvar(v + 1, p)});
      con.terms.push_back({-1, kvar(p)});
      con.relation = LpRelation::Ge;
      con.rhs = 0;
      lp.constraints.push_back(std::move(con));
    }
  declare_x(lp, n, c);
  for (int p = 1; p <= c; p++) lp.binaries.push_back(kvar(p));
  return lp;
}

LpModel bipanchromatic_lp(const Hypergraph& h, int chi_p) {
  validate(h);
  const int n = h.n, m = h.m(), c = chi_p;
  LpModel out;
  out.maximize = true;
  for (int p = 1; p <= c; p++) out.objective.push_back({1, kvar(p)});
  for (int j = 1; j <= n; j++)
    for (int p = 1; p <= c; p++) {
      LpConstraint con;
      con.name = "link_" + std::to_string(j) + "_" + std::to_string(p);
      con.terms = {{1, xvar(j, p)}, {-1, kvar(p)}};
      con.relation = LpRelation::Le;
      con.rhs = 0;
      out.constraints.push_back(std::move(con));
    }
  add_one_color_per_vertex(out, n, c);
  for (int i = 1; i <= m; i++)
    for (int p = 1; p <= c; p++) {
      LpConstraint con;
      con.name = "cover_" + std::to_string(i) + "_" + std::to_string(p);
      for (Vertex v : h.edges[i - 1]) con.terms.push_back({1, xvar(v + 1, p)});
      con.terms.push_back({-1, kvar(p)});
      con.relation = LpRelation::Ge;
      con.rhs = 0;
      out.constraints.push_back(std::move(con));
    }
  for (int p = 1; p <= c; p++) {
    LpConstraint con;
    con.name = "pair_" + std::to_string(p);
    for (int j = 1; j <= n; j++) con.terms.push_back({1, xvar(j, p)});
    con.terms.push_back({-2, kvar(p)});
    con.relation = LpRelation::Ge;
    con.rhs = 0;
    out.constraints.push_back(std::move(con));
  }
  declare_x(out, n, c);
  for (int p = 1; p <= c; p++) out.binaries.push_back(kvar(p));
  return out;
}

LpModel alpha_lp(const Hypergraph& h, int chi_p) {
  validate(h);
  const int n = h.n, m = h.m(), c = chi_p;
  LpModel lp;
  lp.maximize = false;
  for (int p = 1; p <= c; p++) lp.objective.push_back({1, vvar(p)});
  for (int i = 1; i <= m; i++)
    for (int p = 1; p <= c; p++) {
      LpConstraint con;
      con.name = "cover_" + std::to_string(i) + "_" + std::to_string(p);
      for (Vertex v : h.edges[i - 1]) con.terms.push_back({1, xvar(v + 1, p)});
      con.relation = LpRelation::Ge;
      con.rhs = 1;
      lp.constraints.push_back(std::move(con));
    }
  add_one_color_per_vertex(lp, n, c);
  for (int p = 1; p <= c; p++) {
    LpConstraint con;
    con.name = "uniq_" + std::to_string(p);
    for (int j = 1; j <= n; j++) con.terms.push_back({1, xvar(j, p)});
    con.terms.push_back({1, vvar(p)});
    con.relation = LpRelation::Ge;
    con.rhs = 2;
    lp.constraints.push_back(std::move(con));
  }
  declare_x(lp, n, c);
  for (int p = 1; p <= c; p++) lp.binaries.push_back(vvar(p));
  return lp;
}

std::string write_lp(const LpModel& model) {
  std::ostringstream out;
  auto emit_terms = [&out](const std::vector<LpTerm>& terms) {
    bool first = true;
    for (const auto& t : terms) {
      if (first) {
        if (t.coef == -1) out << "- ";
        else if (t.coef != 1) out << t.coef << " ";
        first = false;
      } else {
        out << (t.coef < 0 ? " - " : " + ");
        int a = std::abs(t.coef);
        if (a != 1) out << a << " ";
      }
      out << t.var;
    }
  };
  out << (model.maximize ? "Maximize" : "Minimize") << "\n obj: ";
  emit_terms(model.objective);
  out << "\nSubject To\n";
  for (const auto& con : model.constraints) {
    out << " " << con.name << ": ";
    emit_terms(con.terms);
    switch (con.relation) {
      case LpRelation::Le: out << " <= "; break;
      case LpRelation::Ge: out << " >= "; break;
      case LpRelation::Eq: out << " = "; break;
    }
    out << con.rhs << "\n";
  }
  out << "Binary\n";
  for (const auto& v : model.binaries) out << " " << v << "\n";
  out << "End\n";
  return out.str();
}

std::string export_panchromatic_lp(const Hypergraph& h) {
  return write_lp(panchromatic_lp(h));
}
std::string export_bipanchromatic_lp(const Hypergraph& h, int chi_p) {
  return write_lp(bipanchromatic_lp(h, chi_p));
}
std::string export_alpha_lp(const Hypergraph& h, int chi_p) {
  return write_lp(alpha_lp(h, chi_p));
}

}  // namespace cistkit
