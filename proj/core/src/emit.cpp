#include "uniperf/emit.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "uniperf/csv.hpp"
#include "uniperf/error.hpp"

namespace uniperf {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json optional_json(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string optional_fixed(const std::optional<double>& v, int precision) {
  return v ? fixed(*v, precision) : std::string{};
}

ordered_json histogram_json(const Histogram& h) {
  return {{"counts", h.counts}, {"median", h.median}};
}

ordered_json aggregate_json(const InstitutionGroup& g) {
  const auto& a = g.aggregate;
  ordered_json j;
  if (!g.uda.empty()) j["uda"] = g.uda;
  j["sds_ids"] = g.sds_ids;
  j["total_cost"] = a.total_weight;
  j["te"] = a.te;
  j["ae"] = a.ae;
  j["ce"] = a.ce;
  j["te_pct"] = optional_json(a.te_pct);
  j["ae_pct"] = optional_json(a.ae_pct);
  j["ce_pct"] = optional_json(a.ce_pct);
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& content,
                std::vector<std::filesystem::path>& written) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
  written.push_back(path);
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::set<Format> parse_formats(std::string_view text) {
  std::set<Format> out;
  for (const auto& name : csv::split(text, ',')) {
    if (name == "csv") {
      out.insert(Format::kCsv);
    } else if (name == "json") {
      out.insert(Format::kJson);
    } else if (name == "svg") {
      out.insert(Format::kSvg);
    } else {
      throw DataError("unknown output format '" + name + "'");
    }
  }
  return out;
}

std::string fixed(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  std::string s = buf;
  if (s.rfind("-0.", 0) == 0 && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string file_stem(std::string_view sds_id) {
  std::string out;
  for (char c : sds_id) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
                    c == '_' || c == '.';
    out.push_back(ok ? c : '-');
  }
  return out;
}

nlohmann::ordered_json to_json(const AssessmentReport& report) {
  ordered_json j;
  j["census_date"] = report.config.census_date;
  j["ss_mode"] = report.mode == SsMode::kComputed ? "computed" : "passthrough";
  j["config"] = to_json(report.config);

  j["eligibility_log"] = ordered_json::array();
  j["sds"] = ordered_json::array();
  for (const auto& s : report.sds) {
    j["eligibility_log"].push_back(
        {{"sds_id", s.sds_id},
         {"included", s.eligibility.include},
         {"reason", to_string(s.eligibility.reason)},
         {"universities", s.universities},
         {"publishing_fraction", s.publishing_fraction}});
    if (!s.eligibility.include) continue;

    ordered_json sj;
    sj["sds_id"] = s.sds_id;
    sj["uda"] = s.uda;
    sj["dmus"] = ordered_json::array();
    for (const auto& r : s.rows) {
      ordered_json d;
      d["dmu_id"] = r.input.dmu_id;
      d["ss"] = r.ss;
      d["fp_years"] = r.input.fp_years;
      d["ap_years"] = r.input.ap_years;
      d["rf_years"] = r.input.rf_years;
      d["cost"] = r.cost;
      d["te"] = r.scores.te;
      d["ae"] = r.scores.ae;
      d["ce"] = r.scores.ce;
      d["te_pct"] = optional_json(r.te_pct);
      d["ae_pct"] = optional_json(r.ae_pct);
      d["ce_pct"] = optional_json(r.ce_pct);
      d["ss_per_staff_year"] = r.ss_per_staff_year;
      d["rank_delta"] = r.rank_delta;
      ordered_json weights = ordered_json::object();
      for (const auto& [id, lambda] : r.scores.reference_weights) {
        weights[id] = lambda;
      }
      d["reference_weights"] = std::move(weights);
      sj["dmus"].push_back(std::move(d));
    }
    sj["histograms"] = {{"te", histogram_json(s.te_hist)},
                        {"ae", histogram_json(s.ae_hist)},
                        {"ce", histogram_json(s.ce_hist)}};
    sj["quadrants"] = {{"threshold", report.config.quadrant_threshold},
                       {"low_te_low_ae", s.quadrants.low_te_low_ae},
                       {"low_te_high_ae", s.quadrants.low_te_high_ae},
                       {"high_te_high_ae", s.quadrants.high_te_high_ae},
                       {"high_te_low_ae", s.quadrants.high_te_low_ae}};
    j["sds"].push_back(std::move(sj));
  }

  j["institutions"] = ordered_json::array();
  for (const auto& inst : report.institutions) {
    ordered_json ij;
    ij["dmu_id"] = inst.dmu_id;
    ij["by_uda"] = ordered_json::array();
    for (const auto& g : inst.by_uda) ij["by_uda"].push_back(aggregate_json(g));
    ij["overall"] = aggregate_json(inst.overall);
    j["institutions"].push_back(std::move(ij));
  }
  return j;
}

void write_sds_scores_csv(std::ostream& out, const SdsReport& sds, int p) {
  csv::write_row(out, {"dmu_id", "SS", "FP", "AP", "RF", "TE", "AE", "CE"});
  for (const auto& r : sds.rows) {
    csv::write_row(out, {r.input.dmu_id, fixed(r.ss, p), fixed(r.input.fp_years, p),
                         fixed(r.input.ap_years, p), fixed(r.input.rf_years, p),
                         fixed(r.scores.te, p), fixed(r.scores.ae, p),
                         fixed(r.scores.ce, p)});
  }
}

void write_scores_csv(std::ostream& out, const AssessmentReport& report) {
  const int p = report.config.precision;
  csv::write_row(out, {"sds_id", "dmu_id", "SS", "FP", "AP", "RF", "TE", "AE",
                       "CE", "TE_pct", "AE_pct", "CE_pct"});
  for (const auto& s : report.sds) {
    for (const auto& r : s.rows) {
      csv::write_row(
          out, {s.sds_id, r.input.dmu_id, fixed(r.ss, p), fixed(r.input.fp_years, p),
                fixed(r.input.ap_years, p), fixed(r.input.rf_years, p),
                fixed(r.scores.te, p), fixed(r.scores.ae, p), fixed(r.scores.ce, p),
                optional_fixed(r.te_pct, 0), optional_fixed(r.ae_pct, 0),
                optional_fixed(r.ce_pct, 0)});
    }
  }
}

void write_institutions_csv(std::ostream& out, const AssessmentReport& report) {
  const int p = report.config.precision;
  csv::write_row(out, {"dmu_id", "uda", "cost", "TE", "TE_pct", "AE", "AE_pct",
                       "CE", "CE_pct"});
  auto line = [&](const std::string& dmu, const InstitutionGroup& g) {
    const auto& a = g.aggregate;
    csv::write_row(out, {dmu, g.uda.empty() ? "ALL" : g.uda,
                         fixed(a.total_weight, p), fixed(a.te, p),
                         optional_fixed(a.te_pct, 0), fixed(a.ae, p),
                         optional_fixed(a.ae_pct, 0), fixed(a.ce, p),
                         optional_fixed(a.ce_pct, 0)});
  };
  for (const auto& inst : report.institutions) {
    for (const auto& g : inst.by_uda) line(inst.dmu_id, g);
    line(inst.dmu_id, inst.overall);
  }
}

void write_eligibility_csv(std::ostream& out, const AssessmentReport& report) {
  csv::write_row(out, {"sds_id", "universities", "publishing_fraction",
                       "included", "reason"});
  for (const auto& s : report.sds) {
    csv::write_row(out, {s.sds_id, std::to_string(s.universities),
                         fixed(s.publishing_fraction, report.config.precision),
                         s.eligibility.include ? "1" : "0",
                         to_string(s.eligibility.reason)});
  }
}

std::string histogram_svg(const Histogram& h, const std::string& title) {
  constexpr int kWidth = 400, kHeight = 260, kLeft = 40, kBottom = 220;
  constexpr int kBarWidth = 64, kPlotHeight = 180;
  std::size_t peak = 1;
  for (auto c : h.counts) peak = std::max(peak, c);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "  <text x=\"" << kWidth / 2 << "\" y=\"16\" text-anchor=\"middle\">"
      << xml_escape(title) << "</text>\n";
  for (std::size_t b = 0; b < kHistogramBins; ++b) {
    const int height = static_cast<int>(
        std::lround(static_cast<double>(h.counts[b]) / peak * kPlotHeight));
    const int x = kLeft + static_cast<int>(b) * (kBarWidth + 8);
    svg << "  <rect x=\"" << x << "\" y=\"" << kBottom - height << "\" width=\""
        << kBarWidth << "\" height=\"" << height << "\" fill=\"#4a78a8\"/>\n";
    svg << "  <text x=\"" << x + kBarWidth / 2 << "\" y=\"" << kBottom - height - 4
        << "\" text-anchor=\"middle\">" << h.counts[b] << "</text>\n";
    svg << "  <text x=\"" << x + kBarWidth / 2 << "\" y=\"" << kBottom + 14
        << "\" text-anchor=\"middle\">" << fixed(Histogram::lower_edge(b), 1) << "-"
        << fixed(Histogram::upper_edge(b), 1) << "</text>\n";
  }
  svg << "  <text x=\"" << kWidth / 2 << "\" y=\"" << kBottom + 32
      << "\" text-anchor=\"middle\">median " << fixed(h.median, 3) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string quadrant_svg(const SdsReport& sds, double threshold) {
  constexpr int kSize = 300, kMargin = 40;
  auto px = [&](double v) { return kMargin + v * kSize; };
  auto py = [&](double v) { return kMargin + (1.0 - v) * kSize; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize + 2 * kMargin
      << "\" height=\"" << kSize + 2 * kMargin
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "  <text x=\"" << kMargin + kSize / 2 << "\" y=\"16\" text-anchor=\"middle\">"
      << xml_escape(sds.sds_id) << " efficiency matrix</text>\n";
  svg << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize
      << "\" height=\"" << kSize << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << fixed(px(threshold), 2) << "\" y1=\"" << kMargin
      << "\" x2=\"" << fixed(px(threshold), 2) << "\" y2=\"" << kMargin + kSize
      << "\" stroke=\"gray\"/>\n";
  svg << "  <line x1=\"" << kMargin << "\" y1=\"" << fixed(py(threshold), 2)
      << "\" x2=\"" << kMargin + kSize << "\" y2=\"" << fixed(py(threshold), 2)
      << "\" stroke=\"gray\"/>\n";
  for (const auto& r : sds.rows) {
    svg << "  <circle cx=\"" << fixed(px(r.scores.te), 2) << "\" cy=\""
        << fixed(py(r.scores.ae), 2) << "\" r=\"3\" fill=\"#b03a2e\"><title>"
        << xml_escape(r.input.dmu_id) << "</title></circle>\n";
  }
  svg << "  <text x=\"" << kMargin + kSize / 2 << "\" y=\"" << kSize + kMargin + 28
      << "\" text-anchor=\"middle\">TE</text>\n";
  svg << "  <text x=\"12\" y=\"" << kMargin + kSize / 2 << "\">AE</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

void print_sds_report(std::ostream& out, const SdsReport& s, int p) {
  out << "SDS " << s.sds_id << " (" << s.universities << " universities, "
      << to_string(s.eligibility.reason) << ")\n";
  if (!s.eligibility.include) return;
  out << std::left << std::setw(28) << "dmu_id" << std::right;
  for (const char* h : {"SS", "FP", "AP", "RF", "TE", "AE", "CE"}) {
    out << std::setw(10) << h;
  }
  out << '\n';
  for (const auto& r : s.rows) {
    out << std::left << std::setw(28) << r.input.dmu_id << std::right;
    for (double v : {r.ss, r.input.fp_years, r.input.ap_years, r.input.rf_years,
                     r.scores.te, r.scores.ae, r.scores.ce}) {
      out << std::setw(10) << fixed(v, p);
    }
    out << '\n';
  }
  auto hist = [&](const char* name, const Histogram& h) {
    out << name << " bins";
    for (auto c : h.counts) out << ' ' << c;
    out << "  median " << fixed(h.median, p) << '\n';
  };
  hist("TE", s.te_hist);
  hist("AE", s.ae_hist);
  hist("CE", s.ce_hist);
  out << "matrix low/low " << s.quadrants.low_te_low_ae << ", high-AE/low-TE "
      << s.quadrants.low_te_high_ae << ", high/high " << s.quadrants.high_te_high_ae
      << ", low-AE/high-TE " << s.quadrants.high_te_low_ae << '\n';
}

void print_institution_report(std::ostream& out, const InstitutionReport& inst,
                              const AssessmentReport& report) {
  const int p = report.config.precision;
  out << "Institution " << inst.dmu_id << '\n';
  out << std::left << std::setw(14) << "SDS" << std::right << std::setw(14)
      << "cost (k€)";
  for (const char* h : {"TE", "R%", "AE", "R%", "CE", "R%"}) out << std::setw(8) << h;
  out << '\n';
  auto pct = [](const std::optional<double>& v) {
    return v ? fixed(*v, 0) : std::string("-");
  };
  for (const auto& s : report.sds) {
    for (const auto& r : s.rows) {
      if (r.input.dmu_id != inst.dmu_id) continue;
      out << std::left << std::setw(14) << s.sds_id << std::right << std::setw(14)
          << fixed(r.cost, p) << std::setw(8) << fixed(r.scores.te, p) << std::setw(8)
          << pct(r.te_pct) << std::setw(8) << fixed(r.scores.ae, p) << std::setw(8)
          << pct(r.ae_pct) << std::setw(8) << fixed(r.scores.ce, p) << std::setw(8)
          << pct(r.ce_pct) << '\n';
    }
  }
  auto group = [&](const std::string& label, const InstitutionGroup& g) {
    const auto& a = g.aggregate;
    out << std::left << std::setw(14) << label << std::right << std::setw(14)
        << fixed(a.total_weight, p) << std::setw(8) << fixed(a.te, p) << std::setw(8)
        << pct(a.te_pct) << std::setw(8) << fixed(a.ae, p) << std::setw(8)
        << pct(a.ae_pct) << std::setw(8) << fixed(a.ce, p) << std::setw(8)
        << pct(a.ce_pct) << '\n';
  };
  for (const auto& g : inst.by_uda) group(g.uda + " total", g);
  group("Total", inst.overall);
}

std::vector<std::filesystem::path> emit(const AssessmentReport& report,
                                        const std::set<Format>& formats,
                                        const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  if (formats.count(Format::kJson)) {
    write_file(out_dir / "report.json", to_json(report).dump(2) + "\n", written);
  }
  if (formats.count(Format::kCsv)) {
    std::ostringstream scores, inst, elig;
    write_scores_csv(scores, report);
    write_institutions_csv(inst, report);
    write_eligibility_csv(elig, report);
    write_file(out_dir / "scores.csv", scores.str(), written);
    write_file(out_dir / "institutions.csv", inst.str(), written);
    write_file(out_dir / "eligibility.csv", elig.str(), written);
    for (const auto& s : report.sds) {
      if (!s.eligibility.include) continue;
      std::ostringstream one;
      write_sds_scores_csv(one, s, report.config.precision);
      write_file(out_dir / ("scores_" + file_stem(s.sds_id) + ".csv"), one.str(),
                 written);
    }
  }
  if (formats.count(Format::kSvg)) {
    for (const auto& s : report.sds) {
      if (!s.eligibility.include) continue;
      const auto stem = file_stem(s.sds_id);
      write_file(out_dir / ("hist_" + stem + "_te.svg"),
                 histogram_svg(s.te_hist, s.sds_id + " technical efficiency"), written);
      write_file(out_dir / ("hist_" + stem + "_ae.svg"),
                 histogram_svg(s.ae_hist, s.sds_id + " allocative efficiency"), written);
      write_file(out_dir / ("hist_" + stem + "_ce.svg"),
                 histogram_svg(s.ce_hist, s.sds_id + " cost efficiency"), written);
      write_file(out_dir / ("matrix_" + stem + ".svg"),
                 quadrant_svg(s, report.config.quadrant_threshold), written);
    }
  }
  return written;
}

}  // namespace uniperf
