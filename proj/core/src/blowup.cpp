#include "chiwb/blowup.hpp"

#include <algorithm>
#include <set>

#include "chiwb/errors.hpp"

namespace chiwb {

BlowupChart chart(const RingPtr& source, std::size_t index) {
  const std::size_t d = source->nvars();
  if (index < 1 || index > d)
    fail(Error::Kind::Domain, "chart index out of range");

  std::vector<std::string> vars{"v"};
  for (std::size_t j = 1; j <= d; ++j) {
    if (j == index) continue;
    vars.push_back(d == 2 ? std::string("u") : "u_" + std::to_string(j));
  }
  RingPtr ring = RingContext::make(source->field(), vars, source->order());

  BlowupChart c;
  c.source = source;
  c.index = index;
  c.ring = ring;
  Polynomial v = Polynomial::variable(ring, 0);
  std::size_t u_slot = 1;
  for (std::size_t j = 1; j <= d; ++j) {
    if (j == index) {
      c.substitution.push_back(v);
    } else {
      c.substitution.push_back(v * Polynomial::variable(ring, u_slot));
      ++u_slot;
    }
  }
  c.exceptional = v;
  return c;
}

Ideal total_transform(const Ideal& i, const BlowupChart& c) {
  require_same_ring(i.ring(), c.source);
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators())
    gens.push_back(g.substitute(c.substitution, c.ring));
  return Ideal(c.ring, std::move(gens));
}

Ideal strict_transform(const Ideal& i, const BlowupChart& c) {
  if (!i.in_irrelevant())
    fail(Error::Kind::Domain, "strict transform needs an ideal vanishing at the center");
  return ideal_saturation(total_transform(i, c), c.exceptional);
}

Ideal vbar_locus(const Polynomial& f, const BlowupChart& c) {
  require_same_ring(f.ring(), c.source);
  if (f.is_zero() || f.lowest_form().total_degree() != 1)
    fail(Error::Kind::Domain, "the hypersurface element must have order exactly one");
  Polynomial sub = f.substitute(c.substitution, c.ring);
  Polynomial quotient = sub.divide_exact(c.exceptional);
  Ideal locus(c.ring, {c.exceptional, quotient});
  return Ideal(c.ring, locus.groebner().elements);
}

namespace {

std::vector<Coeff> to_field_point(const RingPtr& ring, const std::vector<mpq_class>& point) {
  if (point.size() != ring->nvars())
    fail(Error::Kind::Domain, "point coordinate count does not match the chart ring");
  std::vector<Coeff> out;
  out.reserve(point.size());
  for (const auto& q : point) out.push_back(ring->field().from_mpq(q));
  return out;
}

Coeff evaluate(const Polynomial& p, const std::vector<Coeff>& point) {
  const Field& f = p.ring()->field();
  Coeff acc = f.zero();
  for (const auto& t : p.terms()) {
    Coeff val = t.coeff;
    for (std::size_t v = 0; v < point.size(); ++v)
      for (std::uint32_t e = 0; e < t.mono.exps[v]; ++e) val = f.mul(val, point[v]);
    acc = f.add(acc, val);
  }
  return acc;
}

// x_w -> x_w + c_w, moving `point` to the origin.
std::vector<Polynomial> translation_images(const RingPtr& ring, const std::vector<Coeff>& point) {
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    images.push_back(Polynomial::variable(ring, v) +
                     Polynomial::constant(ring, point[v]));
  return images;
}

Ideal translate(const Ideal& i, const std::vector<Coeff>& point) {
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators())
    gens.push_back(g.substitute(translation_images(i.ring(), point), i.ring()));
  return Ideal(i.ring(), std::move(gens));
}

Ideal point_ideal(const RingPtr& ring, const std::vector<Coeff>& point) {
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    gens.push_back(Polynomial::variable(ring, v) -
                   Polynomial::constant(ring, point[v]));
  return Ideal(ring, std::move(gens));
}

}  // namespace

bool ramification_check(const Polynomial& f, const BlowupChart& c,
                        const std::vector<mpq_class>& point) {
  std::vector<Coeff> p = to_field_point(c.ring, point);
  Polynomial sub = f.substitute(c.substitution, c.ring);
  Polynomial moved = sub.substitute(translation_images(c.ring, p), c.ring);
  bool in_square = moved.is_zero() || moved.lowest_form().total_degree() >= 2;

  Ideal locus = vbar_locus(f, c);
  bool on_locus = true;
  for (const auto& g : locus.generators())
    if (!evaluate(g, p).is_zero()) {
      on_locus = false;
      break;
    }
  if (in_square != on_locus)
    fail(Error::Kind::AssertionFailed,
         "order-two membership disagrees with the initial-form locus at the given point");
  return in_square;
}

BlowupIntersectionReport blowup_chi(const Ideal& left, const Ideal& right,
                                    const ChartPoints& points) {
  const RingPtr& source = left.ring();
  require_same_ring(left.ring(), right.ring());
  if (!left.in_irrelevant() || !right.in_irrelevant())
    fail(Error::Kind::Domain, "blowup chi requires ideals vanishing at the center");
  if (!support_at_origin(ideal_sum(left, right)))
    fail(Error::Kind::SupportNotAtOrigin,
         "the downstairs intersection must be supported at the origin");

  const std::size_t d = source->nvars();
  BlowupIntersectionReport report;

  for (std::size_t idx = 1; idx <= d; ++idx) {
    BlowupChart c = chart(source, idx);
    Ideal si = strict_transform(left, c);
    Ideal sj = strict_transform(right, c);
    Ideal joint = ideal_sum(si, sj);

    if (!joint.is_unit() && krull_dimension(joint) > 0)
      fail(Error::Kind::SupportNotFinite,
           "strict transforms meet in positive dimension in chart " + std::to_string(idx));

    std::vector<std::vector<mpq_class>> chart_pts;
    if (auto it = points.find(idx); it != points.end()) chart_pts = it->second;
    // drop exact duplicates, preserving order
    {
      std::vector<std::vector<mpq_class>> unique;
      for (auto& p : chart_pts)
        if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
      chart_pts = std::move(unique);
    }

    Ideal residual = joint;
    for (const auto& p : chart_pts)
      residual = ideal_saturation(residual, point_ideal(c.ring, to_field_point(c.ring, p)));
    if (!residual.is_unit())
      fail(Error::Kind::ResidualSupport,
           "chart " + std::to_string(idx) +
               " has intersection support away from the supplied points (" +
               residual.to_string() +
               "); supply the missing rational points or extend the base field");

    for (const auto& p : chart_pts) {
      std::vector<Coeff> fp = to_field_point(c.ring, p);
      BlowupPointChi entry;
      entry.chart = idx;
      entry.point = p;
      entry.on_support = true;
      for (const auto& g : joint.generators())
        if (!evaluate(g, fp).is_zero()) {
          entry.on_support = false;
          break;
        }
      // points on the exceptional divisor are counted in the chart of their
      // first nonzero homogeneous coordinate
      entry.counted = true;
      if (fp[0].is_zero()) {
        std::size_t u_slot = 1;
        for (std::size_t j = 1; j < idx; ++j) {
          const Coeff& a_j = fp[u_slot];
          ++u_slot;
          if (!a_j.is_zero()) {
            entry.counted = false;
            break;
          }
        }
      }
      ChiReport local = chi_local(translate(si, fp), translate(sj, fp));
      entry.chi = local.chi;
      if (entry.counted) report.total += entry.chi;
      report.points.push_back(std::move(entry));
    }
  }
  return report;
}

FultonReport fulton_verify(const Ideal& left, const Ideal& right, const ChartPoints& points) {
  FultonReport report;
  report.chi = chi(left, right).chi;
  report.e_left = point_multiplicity(left);
  report.e_right = point_multiplicity(right);
  report.blowup = blowup_chi(left, right, points);
  report.blowup_total = report.blowup.total;
  report.blowup.fulton_lhs = report.chi;
  report.blowup.fulton_rhs = report.e_left * report.e_right + report.blowup_total;
  report.holds = report.chi == report.e_left * report.e_right + report.blowup_total;
  return report;
}

CorollaryDReport corollary_d_check(const Ideal& left, const Ideal& right,
                                   const ChartPoints& points) {
  Ideal cone_sum = ideal_sum(tangent_cone(left), tangent_cone(right));
  CorollaryDReport report;
  report.cone_dim = krull_dimension(cone_sum);
  if (report.cone_dim > 1)
    fail(Error::Kind::Domain,
         "tangent cones meet in dimension " + std::to_string(report.cone_dim) +
             "; the statement needs dimension at most one");

  report.chi = chi(left, right).chi;
  report.e_product = point_multiplicity(left) * point_multiplicity(right);
  BlowupIntersectionReport blow = blowup_chi(left, right, points);
  report.blowup_total = blow.total;
  report.equality_case = report.chi == report.e_product;

  const RingPtr& source = left.ring();
  report.empty_on_blowup = true;
  for (std::size_t idx = 1; idx <= source->nvars(); ++idx) {
    BlowupChart c = chart(source, idx);
    Ideal joint = ideal_sum(strict_transform(left, c), strict_transform(right, c));
    if (!joint.is_unit()) {
      report.empty_on_blowup = false;
      break;
    }
  }

  if (report.equality_case) {
    report.conclusion_verified =
        report.blowup_total == 0 && report.empty_on_blowup && report.cone_dim == 0;
  } else {
    bool all_positive = true;
    for (const auto& p : blow.points)
      if (p.counted && p.on_support && p.chi <= 0) all_positive = false;
    report.conclusion_verified = report.blowup_total > 0 && all_positive;
  }
  return report;
}

}  // namespace chiwb
