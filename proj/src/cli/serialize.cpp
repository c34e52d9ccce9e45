#include <cstdio>
#include <sstream>

#include "metallic/cli.hpp"
#include "metallic/errors.hpp"

namespace metallic::cli {

namespace {

nlohmann::json integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string start_float(const QuadElement& v, mpfr_prec_t bits) {
  return float17(to_float(v, bits).to_double());
}

std::string length_float(Field field, int m, mpfr_prec_t bits) {
  return float17(to_float(gamma_pow(field, -m), bits).to_double());
}

}  // namespace

nlohmann::json quad_to_json(const QuadElement& v) {
  return {{"c0_num", v.c0().get_num().get_str()},
          {"c0_den", v.c0().get_den().get_str()},
          {"c1_num", v.c1().get_num().get_str()},
          {"c1_den", v.c1().get_den().get_str()}};
}

QuadElement quad_from_strings(Field field, const std::string& c0_num, const std::string& c0_den,
                              const std::string& c1_num, const std::string& c1_den) {
  try {
    const mpz_class n0{c0_num}, d0{c0_den}, n1{c1_num}, d1{c1_den};
    if (sgn(d0) == 0 || sgn(d1) == 0) {
      throw Error(ErrorCode::kInvalidArgument, "zero denominator in exact coordinate");
    }
    mpq_class c0{n0, d0};
    mpq_class c1{n1, d1};
    c0.canonicalize();
    c1.canonicalize();
    return QuadElement(field, std::move(c0), std::move(c1));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kInvalidArgument, "exact coordinates must be decimal integers");
  }
}

std::string float17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json dimension_json(const DimensionReport& r) {
  const FractalSpec& s = r.spec;
  return {{"p", s.params.p()},
          {"q", s.params.q()},
          {"n", s.n},
          {"l", s.remove_long},
          {"s", s.remove_short},
          {"policy", to_string(s.policy)},
          {"Na_prime", integer_json(r.poly.linear_coeff)},
          {"Nb_prime", integer_json(r.poly.constant_coeff)},
          {"poly", r.poly.to_string()},
          {"root", r.root.to_double()},
          {"root_hp", r.root.to_string(36)},
          {"dim", r.dim},
          {"similarity_dim", r.dim},
          {"hausdorff_dim", r.dim},
          {"gamma", s.params.gamma_double()},
          {"residual", r.root_residual}};
}

std::string cover_csv(const IntervalCover& cover, mpfr_prec_t bits) {
  const std::vector<Survivor> surv = survivors(cover.spec);
  const Field field = cover.spec.params.field();
  std::ostringstream os;
  for (std::size_t c = 0; c < kCoverColumns.size(); ++c) os << (c ? "," : "") << kCoverColumns[c];
  os << "\n";
  for (std::size_t i = 0; i < cover.intervals.size(); ++i) {
    const Interval& iv = cover.intervals[i];
    os << cover.depth << "," << i << "," << kind_path(surv, cover.depth, i) << ","
       << iv.start.c0().get_num().get_str() << "," << iv.start.c0().get_den().get_str() << ","
       << iv.start.c1().get_num().get_str() << "," << iv.start.c1().get_den().get_str() << ","
       << start_float(iv.start, bits) << "," << iv.length_exponent << ","
       << length_float(field, iv.length_exponent, bits) << "\n";
  }
  return os.str();
}

nlohmann::json cover_json(const IntervalCover& cover, mpfr_prec_t bits) {
  const std::vector<Survivor> surv = survivors(cover.spec);
  const Field field = cover.spec.params.field();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < cover.intervals.size(); ++i) {
    const Interval& iv = cover.intervals[i];
    rows.push_back({{"index", i},
                    {"kind_path", kind_path(surv, cover.depth, i)},
                    {"start", quad_to_json(iv.start)},
                    {"start_float", to_float(iv.start, bits).to_double()},
                    {"length_exponent", iv.length_exponent},
                    {"length_float", to_float(gamma_pow(field, -iv.length_exponent), bits).to_double()}});
  }
  return {{"p", cover.spec.params.p()},
          {"q", cover.spec.params.q()},
          {"n", cover.spec.n},
          {"l", cover.spec.remove_long},
          {"s", cover.spec.remove_short},
          {"depth", cover.depth},
          {"count", cover.intervals.size()},
          {"intervals", std::move(rows)}};
}

std::vector<CoverRow> parse_cover_csv(std::string_view text) {
  std::vector<CoverRow> rows;
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorCode::kInvalidArgument, "cover CSV is empty");
  std::string header;
  for (std::size_t c = 0; c < kCoverColumns.size(); ++c) header += (c ? "," : "") + kCoverColumns[c];
  if (line != header) throw Error(ErrorCode::kInvalidArgument, "unexpected cover CSV header: " + line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = line.find(',', pos);
      f.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (f.size() != kCoverColumns.size()) {
      throw Error(ErrorCode::kInvalidArgument, "cover CSV row has " + std::to_string(f.size()) +
                                                   " fields: " + line);
    }
    try {
      rows.push_back(CoverRow{std::stoi(f[0]), std::stoull(f[1]), f[2], f[3], f[4], f[5], f[6],
                              f[7], std::stoi(f[8]), f[9]});
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "malformed cover CSV row: " + line);
    }
  }
  return rows;
}

std::string tiling_csv(const Tiling& tiling, mpfr_prec_t bits) {
  std::ostringstream os;
  os << "index,kind,start_c0_num,start_c0_den,start_c1_num,start_c1_den,start_float,"
        "length_exponent,length_float\n";
  for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
    const Tile& t = tiling.tiles[i];
    os << i << "," << letter(t.kind) << "," << t.start.c0().get_num().get_str() << ","
       << t.start.c0().get_den().get_str() << "," << t.start.c1().get_num().get_str() << ","
       << t.start.c1().get_den().get_str() << "," << start_float(t.start, bits) << ","
       << t.length_exponent << "," << length_float(tiling.params.field(), t.length_exponent, bits)
       << "\n";
  }
  return os.str();
}

nlohmann::json tiling_json(const Tiling& tiling, mpfr_prec_t bits) {
  nlohmann::json tiles = nlohmann::json::array();
  for (const Tile& t : tiling.tiles) {
    tiles.push_back({{"kind", std::string(1, letter(t.kind))},
                     {"start", quad_to_json(t.start)},
                     {"start_float", to_float(t.start, bits).to_double()},
                     {"length_exponent", t.length_exponent}});
  }
  return {{"p", tiling.params.p()},
          {"q", tiling.params.q()},
          {"n", tiling.n},
          {"word", tiling.word()},
          {"tiles", std::move(tiles)}};
}

std::string metallic_table(const std::vector<std::pair<int, int>>& extra) {
  struct Named {
    const char* name;
    int p;
    int q;
  };
  static const Named kNamed[] = {{"Golden", 1, 1}, {"Silver", 2, 1}, {"Bronze", 3, 1},
                                 {"Copper", 1, 2}, {"Nickel", 1, 3}};
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-8s %3s %3s  %-6s %s\n", "name", "p", "q", "symbol", "value");
  os << buf;
  auto row = [&](const char* name, int p, int q) {
    MetallicParams params(p, q);
    // Symbols are multi-byte UTF-8, so pad by hand.
    std::string sym = params.symbol();
    std::snprintf(buf, sizeof buf, "%-8s %3d %3d  ", name, p, q);
    os << buf << sym << "      " << params.gamma().to_fixed(12) << "\n";
  };
  for (const Named& n : kNamed) row(n.name, n.p, n.q);
  for (const auto& [p, q] : extra) row("General", p, q);
  return os.str();
}

}  // namespace metallic::cli
