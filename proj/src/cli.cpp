#include "tiltwall/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "tiltwall/bounds.hpp"
#include "tiltwall/chern.hpp"
#include "tiltwall/destab.hpp"
#include "tiltwall/errors.hpp"
#include "tiltwall/moduli.hpp"
#include "tiltwall/plot.hpp"
#include "tiltwall/wallgeom.hpp"

namespace tiltwall {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Tsv };

struct Ctx {
  Format fmt = Format::Text;
  std::ostream& out;
  std::ostream& err;
};

// "(r,c,d,e)" or "(r,c,d,*)" / "(r,c,d)".
struct MaybeClass {
  ChernTrunc trunc;
  std::optional<Rat> ch3;

  std::string str() const {
    if (!ch3) return trunc.str();
    return ChernCharacter{trunc.ch0, trunc.ch1, trunc.ch2, *ch3}.str();
  }
  ChernCharacter full() const {
    if (!ch3) throw ParseError("this command needs ch3 in " + trunc.str());
    return {trunc.ch0, trunc.ch1, trunc.ch2, *ch3};
  }
};

MaybeClass parse_maybe(const std::string& text) {
  ChernTrunc t = parse_trunc(text);
  auto comma = text.rfind(',');
  auto close = text.rfind(')');
  std::string last = text.substr(comma + 1, close - comma - 1);
  std::string stripped;
  for (char ch : last) {
    if (ch != ' ' && ch != '\t') stripped.push_back(ch);
  }
  std::size_t commas = std::count(text.begin(), text.end(), ',');
  if (commas == 2 || stripped == "*") return {t, std::nullopt};
  ChernCharacter v = parse_class(text);
  return {t, v.ch3};
}

long parse_long(const std::string& text, const char* what) {
  Rat r = Rat::parse(text);
  if (!r.is_integer()) throw ParseError(std::string(what) + " must be an integer: " + text);
  return r.to_long();
}

json wall_entry(const Semicircle& w, const std::string& sub, const Rat& alphasq) {
  return json{{"s", w.s.str()}, {"rho2", w.rhosq.str()}, {"sub", sub}, {"alphasq", alphasq.str()}};
}

json envelope(const std::string& cls, json walls, const std::optional<Rat>& bound) {
  return json{{"class", cls},
              {"walls", std::move(walls)},
              {"bound", bound ? json(bound->str()) : json(nullptr)}};
}

std::optional<Rat> try_max_ch3(const ChernTrunc& u) {
  if (u.ch0 < Rat(-2) || u.ch0 > Rat(2)) return std::nullopt;
  try {
    return max_ch3(u);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// ---- commands -----------------------------------------------------------

int cmd_wall(Ctx& ctx, const std::string& vtext, const std::string& wtext, bool q) {
  MaybeClass v = parse_maybe(vtext);
  Wall w = Degenerate{};
  std::string subtext;
  if (q) {
    ChernCharacter full = v.full();
    w = q_wall(full);
    subtext = ChernTrunc{full.ch1, Rat(2) * full.ch2, Rat(3) * full.ch3}.str();
  } else {
    if (wtext.empty()) throw ParseError("wall needs a second class or --q");
    MaybeClass other = parse_maybe(wtext);
    w = wall(v.trunc, other.trunc);
    subtext = other.str();
  }
  const bool bad = w.is_degenerate() || w.is_empty();
  if (ctx.fmt == Format::Json) {
    json walls = json::array();
    if (w.is_semicircle()) {
      walls.push_back(wall_entry(w.semicircle(), subtext, w.semicircle().rhosq));
    } else if (w.is_vertical()) {
      const auto& vb = std::get<Vertical>(w.variant());
      walls.push_back(json{{"s", vb.beta.str()}, {"rho2", "+inf"}, {"sub", subtext},
                           {"alphasq", "+inf"}});
    }
    ctx.out << envelope(v.str(), walls, std::nullopt).dump() << "\n";
  } else if (ctx.fmt == Format::Tsv) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Semicircle>) {
            ctx.out << "semicircle\t" << x.s << "\t" << x.rhosq << "\n";
          } else if constexpr (std::is_same_v<T, Vertical>) {
            ctx.out << "vertical\t" << x.beta << "\n";
          } else if constexpr (std::is_same_v<T, EmptyWall>) {
            ctx.out << "empty\t" << x.s << "\t" << x.rhosq << "\n";
          } else {
            ctx.out << "degenerate\n";
          }
        },
        w.variant());
  } else {
    ctx.out << w.str() << "\n";
  }
  if (bad) {
    ctx.err << (w.is_degenerate() ? "classes are proportional: no numerical wall"
                                  : "the wall equation has no real points")
            << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_bound(Ctx& ctx, const std::vector<std::string>& args, bool searched, bool certificate) {
  if (args.size() != 3) throw ParseError("bound needs r c d");
  long r = parse_long(args[0], "rank");
  long c = parse_long(args[1], "ch1");
  Rat d = Rat::parse(args[2]);
  if (r < -2 || r > 2) throw ParseError("rank must be in -2..2");
  if ((searched || certificate) && r != 2) {
    throw ParseError("--searched and --certificate apply to rank 2");
  }
  ChernTrunc u{r, c, d};
  Rat closed = max_ch3(u);
  std::optional<SearchedBound> sb;
  if (searched || certificate) {
    // Normalize to ch1 in {0, -1}, search, then twist the answer back.
    long n = rank2_normalizing_twist(c);
    ChernCharacter t = tensor_line_bundle({2, c, d, 0}, n);
    SearchedBound raw = rank2_max_ch3_searched(t.ch1, t.ch2);
    ChernCharacter top = tensor_line_bundle({2, t.ch1, t.ch2, raw.e}, -n);
    BoundCertificate cert = std::visit(
        [&](const auto& x) -> BoundCertificate {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, QCert>) {
            return QCert{{x.point.beta - Rat(n), x.point.alphasq}};
          } else if constexpr (std::is_same_v<T, WallCert>) {
            return WallCert{tensor_line_bundle(x.sub, -n), tensor_line_bundle(x.quot, -n),
                            Semicircle{x.wall.s - Rat(n), x.wall.rhosq}};
          } else {
            return RigidCert{{x.line_bundle.n - n, x.line_bundle.m, x.line_bundle.negated}};
          }
        },
        raw.cert);
    sb = SearchedBound{top.ch3, cert};
  }
  const Rat e = searched ? sb->e : closed;
  const ChernCharacter v{r, c, d, e};
  if (ctx.fmt == Format::Json) {
    json walls = json::array();
    if (sb && certificate) {
      if (const auto* wc = std::get_if<WallCert>(&sb->cert)) {
        walls.push_back(wall_entry(wc->wall, wc->sub.str(), wc->wall.rhosq));
      }
    }
    ctx.out << envelope(v.str(), walls, e).dump() << "\n";
  } else if (ctx.fmt == Format::Tsv) {
    ctx.out << r << "\t" << c << "\t" << d << "\t" << e << "\n";
  } else {
    ctx.out << e << "\n";
    if (searched) {
      ctx.out << "searched " << sb->e << " closed " << closed << " "
              << (sb->e == closed ? "agree" : "disagree") << "\n";
    }
    if (certificate) ctx.out << "certificate " << certificate_str(sb->cert) << "\n";
  }
  if (searched && sb->e != closed) return kExitDomain;
  return kExitOk;
}

int cmd_scan(Ctx& ctx, const std::string& vtext, const std::string& beta, bool min_q) {
  ChernCharacter v = parse_class(vtext);
  Rat b = Rat::parse(beta);
  std::optional<Wall> min;
  if (min_q) min = q_wall(v);
  Enumeration en = enumerate_candidates_report(v, b, min);
  for (const auto& w : en.warnings) ctx.err << "warning: " << w << "\n";
  if (ctx.fmt == Format::Json) {
    json walls = json::array();
    for (const auto& cw : en.candidates) {
      walls.push_back(wall_entry(cw.wall, cw.sub.str(), cw.alphasq_at_probe));
    }
    ctx.out << envelope(v.str(), walls, try_max_ch3(v.trunc())).dump() << "\n";
    return kExitOk;
  }
  ctx.out << "sub\ts\trho2\talphasq\n";
  for (const auto& cw : en.candidates) {
    ctx.out << cw.sub << "\t" << cw.wall.s << "\t" << cw.wall.rhosq << "\t"
            << cw.alphasq_at_probe << "\n";
  }
  return kExitOk;
}

int cmd_moduli(Ctx& ctx, const std::string& ctext, const std::string& dtext) {
  Rat c(parse_long(ctext, "ch1"));
  Rat d = Rat::parse(dtext);
  ModuliDescription m = moduli_description(c, d);
  Rat e = rank2_max_ch3_closed(c, d);
  ChernCharacter v{2, c, d, e};
  if (ctx.fmt == Format::Json) {
    json j = envelope(v.str(), json::array(), e);
    j["value"] = m.str();
    j["dimension"] = m.dimension;
    ctx.out << j.dump() << "\n";
  } else if (ctx.fmt == Format::Tsv) {
    ctx.out << v << "\t" << m.str() << "\t" << m.dimension << "\n";
  } else {
    ctx.out << m.str() << "\n";
  }
  return kExitOk;
}

int cmd_value(Ctx& ctx, const std::string& cls, const std::string& value) {
  if (ctx.fmt == Format::Json) {
    json j = envelope(cls, json::array(), std::nullopt);
    j["value"] = value;
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << value << "\n";
  }
  return kExitOk;
}

int cmd_chi(Ctx& ctx, const std::string& vtext, const std::string& wtext) {
  ChernCharacter v = parse_class(vtext);
  if (wtext.empty()) return cmd_value(ctx, v.str(), euler_char(v).str());
  ChernCharacter w = parse_class(wtext);
  return cmd_value(ctx, v.str(), euler_pairing(v, w).str());
}

int cmd_lattice(Ctx& ctx, const std::string& vtext) {
  ChernCharacter v = parse_class(vtext);
  return cmd_value(ctx, v.str(), is_sheaf_lattice_class(v) ? "true" : "false");
}

struct PlotArgs {
  std::string cls, output, beta_min, beta_max, alpha_max, layers;
};

int cmd_plot(Ctx& ctx, const PlotArgs& a) {
  ChernCharacter v = parse_class(a.cls);
  PlotSpec spec = PlotSpec::defaults(v);
  if (!a.beta_min.empty()) spec.beta_min = Rat::parse(a.beta_min);
  if (!a.beta_max.empty()) spec.beta_max = Rat::parse(a.beta_max);
  if (!a.alpha_max.empty()) spec.alpha_max = Rat::parse(a.alpha_max);
  if (!a.layers.empty()) spec.layers = parse_layers(a.layers);
  spec.output_path = a.output;
  std::string svg = render_svg(spec);
  if (a.output.empty() || a.output == "-") {
    ctx.out << svg;
    return kExitOk;
  }
  std::ofstream f(a.output);
  if (!f || !(f << svg) || !f.flush()) {
    ctx.err << "cannot write " << a.output << "\n";
    return kExitParse;
  }
  if (ctx.fmt == Format::Json) {
    json walls = json::array();
    for (const auto& cw : potential_walls(v, default_probes(v))) {
      walls.push_back(wall_entry(cw.wall, cw.sub.str(), cw.alphasq_at_probe));
    }
    ctx.out << envelope(v.str(), walls, try_max_ch3(v.trunc())).dump() << "\n";
  } else {
    ctx.out << "wrote " << a.output << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tilt stability walls and ch3 bounds on P3", "tiltwalls"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json_out = false, tsv_out = false;
  auto* jf = app.add_flag("--json", json_out, "JSON output");
  app.add_flag("--tsv", tsv_out, "tab separated output")->excludes(jf);

  std::string v, w, beta, c, d;
  bool q = false, searched = false, certificate = false, min_q = false;
  std::vector<std::string> bound_args;
  PlotArgs plot;

  auto* wall_cmd = app.add_subcommand("wall", "numerical wall W(v, w) or the Q-wall of v");
  wall_cmd->add_option("v", v, "class, ch3 may be *")->required();
  wall_cmd->add_option("w", w, "second class");
  wall_cmd->add_flag("--q", q, "Q-wall of v");

  auto* bound_cmd = app.add_subcommand("bound", "maximal ch3 for (r, c, d)");
  bound_cmd->add_option("rcd", bound_args, "r c d")->expected(3)->required();
  bound_cmd->add_flag("--searched", searched, "recompute by wall search");
  bound_cmd->add_flag("--certificate", certificate, "print the certificate");

  auto* scan_cmd = app.add_subcommand("scan", "candidate walls along a vertical probe line");
  scan_cmd->add_option("v", v, "class")->required();
  scan_cmd->add_option("--beta", beta, "probe line")->required();
  scan_cmd->add_flag("--min-q", min_q, "require walls outside the Q-wall");

  auto* moduli_cmd = app.add_subcommand("moduli", "moduli description for (2, c, d, e_max)");
  moduli_cmd->add_option("c", c)->required();
  moduli_cmd->add_option("d", d)->required();

  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic or pairing");
  chi_cmd->add_option("v", v)->required();
  chi_cmd->add_option("w", w);

  auto* lattice_cmd = app.add_subcommand("lattice", "sheaf lattice membership");
  lattice_cmd->add_option("v", v)->required();

  auto* plot_cmd = app.add_subcommand("plot", "SVG wall diagram");
  plot_cmd->add_option("v", plot.cls)->required();
  plot_cmd->add_option("-o,--output", plot.output, "output path (default stdout)");
  plot_cmd->add_option("--beta-min", plot.beta_min);
  plot_cmd->add_option("--beta-max", plot.beta_max);
  plot_cmd->add_option("--alpha-max", plot.alpha_max);
  plot_cmd->add_option("--layers", plot.layers, "walls,q_wall,nu_zero,vertical,candidates");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  Ctx ctx{json_out ? Format::Json : (tsv_out ? Format::Tsv : Format::Text), out, err};
  try {
    if (*wall_cmd) return cmd_wall(ctx, v, w, q);
    if (*bound_cmd) return cmd_bound(ctx, bound_args, searched, certificate);
    if (*scan_cmd) return cmd_scan(ctx, v, beta, min_q);
    if (*moduli_cmd) return cmd_moduli(ctx, c, d);
    if (*chi_cmd) return cmd_chi(ctx, v, w);
    if (*lattice_cmd) return cmd_lattice(ctx, v);
    if (*plot_cmd) return cmd_plot(ctx, plot);
  } catch (const NoSemistableClass& e) {
    if (ctx.fmt == Format::Json) {
      ctx.out << envelope("", json::array(), std::nullopt).dump() << "\n";
    } else {
      ctx.out << "no semistable class\n";
    }
    err << e.what() << "\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return kExitDomain;
  } catch (const UnsupportedRange& e) {
    err << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}

}  // namespace tiltwall
