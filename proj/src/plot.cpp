#include "tiltwall/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "tiltwall/bounds.hpp"
#include "tiltwall/destab.hpp"
#include "tiltwall/errors.hpp"
#include "tiltwall/wallgeom.hpp"

namespace tiltwall {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 40.0;
constexpr int kNuSamples = 128;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

struct Frame {
  double b0, b1, amax;
  double x(double beta) const { return kMargin + (beta - b0) / (b1 - b0) * kWidth; }
  double y(double alpha) const { return kMargin + kHeight - alpha / amax * kHeight; }
  double sx() const { return kWidth / (b1 - b0); }
  double sy() const { return kHeight / amax; }
};

std::string arc(const Frame& f, const Semicircle& w, const std::string& cls,
                const std::string& extra) {
  double s = w.s.to_double();
  double rho = std::sqrt(w.rhosq.to_double());
  std::ostringstream os;
  os << "<path class=\"" << cls << "\" d=\"M " << num(f.x(s - rho)) << " " << num(f.y(0))
     << " A " << num(rho * f.sx()) << " " << num(rho * f.sy()) << " 0 0 1 "
     << num(f.x(s + rho)) << " " << num(f.y(0)) << "\" fill=\"none\"" << extra
     << "><title>" << xml_escape(Wall(w).str()) << "</title></path>\n";
  return os.str();
}

std::vector<Rat> probes_left_of_wall(const ChernCharacter& v) {
  std::vector<Rat> out;
  for (const auto& b : default_probes(v)) {
    if ((v.ch1 - b * v.ch0).sign() > 0) out.push_back(b);
  }
  return out;
}

}  // namespace

Rat sqrt_upper(const Rat& x) {
  if (x.sign() < 0) throw std::invalid_argument("sqrt of a negative rational");
  mpz_class scaled = Rat(x * Rat(4096)).ceil();
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  if (r * r < scaled) r += 1;
  return Rat(mpq_class(r, 64));
}

std::set<PlotLayer> parse_layers(const std::string& text) {
  std::set<PlotLayer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "walls") out.insert(PlotLayer::Walls);
    else if (item == "q_wall") out.insert(PlotLayer::QWall);
    else if (item == "nu_zero") out.insert(PlotLayer::NuZero);
    else if (item == "vertical") out.insert(PlotLayer::Vertical);
    else if (item == "candidates") out.insert(PlotLayer::Candidates);
    else throw ParseError("unknown plot layer '" + item + "'");
  }
  return out;
}

PlotSpec PlotSpec::defaults(const ChernCharacter& v) {
  PlotSpec p;
  p.cls = v;
  p.layers = {PlotLayer::Walls, PlotLayer::QWall, PlotLayer::NuZero, PlotLayer::Vertical};
  Rat dv = delta(v);
  if (v.ch0.is_zero()) {
    Rat centre = v.ch1.is_zero() ? Rat(0) : v.ch2 / v.ch1;
    Rat half = abs(v.ch1) * Rat(1, 2) + Rat(1);
    p.beta_min = centre - half;
    p.beta_max = centre + half;
  } else {
    Rat m = v.ch1 / v.ch0;
    Rat scale = std::max(Rat(1), v.ch0 * v.ch0);
    Rat spread = dv.sign() > 0 ? sqrt_upper(dv / scale) : Rat(0);
    p.beta_min = m - Rat(2) * spread - Rat(1);
    p.beta_max = m;
  }
  Rat amax = (p.beta_max - p.beta_min) * Rat(1, 2);
  Wall qw = q_wall(v);
  if (qw.is_semicircle()) amax = std::max(amax, sqrt_upper(qw.semicircle().rhosq));
  p.alpha_max = std::max(Rat(1), amax * Rat(6, 5));
  return p;
}

void PlotSpec::validate() const {
  if (!(beta_min < beta_max)) throw ParseError("empty beta range");
  if (alpha_max.sign() <= 0) throw ParseError("alpha max must be positive");
}

std::string render_svg(const PlotSpec& spec) {
  spec.validate();
  const ChernCharacter& v = spec.cls;
  Frame f{spec.beta_min.to_double(), spec.beta_max.to_double(), spec.alpha_max.to_double()};
  auto has = [&](PlotLayer l) { return spec.layers.count(l) > 0; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << num(kWidth + 2 * kMargin) << "\" height=\"" << num(kHeight + 2 * kMargin) << "\">\n"
     << "<title>tilt walls " << xml_escape(v.str()) << "</title>\n"
     << "<metadata>class=" << xml_escape(v.str()) << " beta=[" << spec.beta_min.str() << ","
     << spec.beta_max.str() << "] alpha_max=" << spec.alpha_max.str() << "</metadata>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth + 2 * kMargin) << "\" height=\""
     << num(kHeight + 2 * kMargin) << "\" fill=\"white\"/>\n"
     << "<line class=\"axis\" x1=\"" << num(f.x(f.b0)) << "\" y1=\"" << num(f.y(0))
     << "\" x2=\"" << num(f.x(f.b1)) << "\" y2=\"" << num(f.y(0))
     << "\" stroke=\"black\"/>\n";

  const auto probes = probes_left_of_wall(v);
  if (has(PlotLayer::Walls) && !probes.empty()) {
    for (const auto& cw : potential_walls(v, probes)) {
      os << arc(f, cw.wall, "candidate-wall", " stroke=\"blue\"");
    }
  }
  if (has(PlotLayer::Candidates)) {
    for (const auto& b : probes) {
      for (const auto& cw : enumerate_candidates(v, b, std::nullopt)) {
        os << arc(f, cw.wall, "raw-candidate", " stroke=\"gray\" stroke-width=\"0.5\"");
      }
    }
  }
  if (has(PlotLayer::QWall)) {
    Wall qw = q_wall(v);
    if (qw.is_semicircle()) {
      os << arc(f, qw.semicircle(), "q-wall", " stroke=\"red\" stroke-dasharray=\"6 4\"");
    }
  }
  if (has(PlotLayer::NuZero)) {
    // nu = 0: alpha^2 = (beta - mu)^2 - Delta / r^2, or the line beta = ch2/ch1 for rank 0.
    std::vector<std::vector<std::pair<double, double>>> branches;
    if (v.ch0.is_zero()) {
      if (!v.ch1.is_zero()) {
        Rat b = v.ch2 / v.ch1;
        auto& pts = branches.emplace_back();
        for (int i = 0; i < kNuSamples; ++i) {
          Rat a = spec.alpha_max * Rat(i, kNuSamples - 1);
          pts.emplace_back(b.to_double(), a.to_double());
        }
      }
    } else {
      const ChernTrunc t = v.trunc();
      const Rat m = t.ch1 / t.ch0;
      const Rat dr = delta(t) / (t.ch0 * t.ch0);
      const double inner = dr.sign() > 0 ? std::sqrt(dr.to_double()) : 0.0;
      const double outer = std::sqrt((dr + spec.alpha_max * spec.alpha_max).to_double());
      const double md = m.to_double();
      const double lo_b = std::max(spec.beta_min.to_double(), md - outer);
      const double hi_b = std::min(spec.beta_max.to_double(), md + outer);
      const std::pair<double, double> spans[2] = {{lo_b, std::min(hi_b, md - inner)},
                                                  {std::max(lo_b, md + inner), hi_b}};
      const long grid = 4096;
      for (const auto& [lo, hi] : spans) {
        Rat a(static_cast<long>(std::ceil(lo * grid)), grid);
        Rat b(static_cast<long>(std::floor(hi * grid)), grid);
        if (!(a < b)) continue;
        auto& pts = branches.emplace_back();
        for (int i = 0; i < kNuSamples; ++i) {
          Rat beta = a + (b - a) * Rat(i, kNuSamples - 1);
          Rat d = beta - m;
          Rat a2 = d * d - dr;
          if (a2.sign() < 0) continue;
          double alpha = std::sqrt(a2.to_double());
          if (alpha > f.amax) continue;
          pts.emplace_back(beta.to_double(), alpha);
        }
      }
    }
    for (const auto& pts : branches) {
      if (pts.empty()) continue;
      os << "<polyline class=\"nu-zero\" fill=\"none\" stroke=\"green\" points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        os << (i ? " " : "") << num(f.x(pts[i].first)) << "," << num(f.y(pts[i].second));
      }
      os << "\"/>\n";
    }
  }
  if (has(PlotLayer::Vertical)) {
    if (auto vb = vertical_wall(v.trunc());
        vb && *vb >= spec.beta_min && *vb <= spec.beta_max) {
      double x = f.x(vb->to_double());
      os << "<line class=\"vertical-wall\" x1=\"" << num(x) << "\" y1=\"" << num(f.y(0))
         << "\" x2=\"" << num(x) << "\" y2=\"" << num(f.y(f.amax))
         << "\" stroke=\"black\" stroke-dasharray=\"2 2\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tiltwall
