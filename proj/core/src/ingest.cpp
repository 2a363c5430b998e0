#include "uniperf/ingest.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "uniperf/csv.hpp"
#include "uniperf/error.hpp"

namespace uniperf {

namespace {

using Key = std::pair<std::string, std::string>;  // (sds_id, dmu_id)

std::vector<StaffRow> read_staff(const std::filesystem::path& path) {
  const auto t = csv::Table::read(path);
  const auto c_dmu = t.require_column({"dmu_id", "university"});
  const auto c_sds = t.require_column({"sds_id", "sds"});
  const auto c_fp = t.require_column({"fp_years", "fp"});
  const auto c_ap = t.require_column({"ap_years", "ap"});
  const auto c_rf = t.require_column({"rf_years", "rf"});
  const auto c_ss = t.find_column({"ss"});
  const auto c_uda = t.find_column({"uda"});

  std::vector<StaffRow> out;
  for (const auto& row : t.rows()) {
    StaffRow s;
    try {
      s.input = DmuInput::make(row.fields[c_dmu], row.fields[c_sds],
                               csv::parse_double(t, row, c_fp),
                               csv::parse_double(t, row, c_ap),
                               csv::parse_double(t, row, c_rf));
    } catch (const DataError& e) {
      throw DataError(t.where(row) + ": " + e.what());
    }
    if (s.input.dmu_id.empty() || s.input.sds_id.empty()) {
      throw DataError(t.where(row) + ": empty dmu_id or sds_id");
    }
    if (c_ss && !row.fields[*c_ss].empty()) {
      s.ss = csv::parse_double(t, row, *c_ss);
      if (!(*s.ss >= 0.0)) throw DataError(t.where(row) + ": negative ss");
    }
    s.uda = c_uda && !row.fields[*c_uda].empty() ? row.fields[*c_uda]
                                                 : default_uda(s.input.sds_id);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<PublicationRow> read_publications(const std::filesystem::path& path) {
  const auto t = csv::Table::read(path);
  const auto c_pub = t.require_column({"pub_id"});
  const auto c_dmu = t.require_column({"dmu_id"});
  const auto c_sds = t.require_column({"sds_id"});
  const auto c_year = t.require_column({"year"});
  const auto c_cit = t.require_column({"citations"});
  const auto c_cat = t.require_column({"categories"});
  const auto c_auth = t.require_column({"total_authors"});
  const auto c_pos = t.require_column({"dmu_positions"});
  const auto c_life = t.require_column({"life_science"});
  const auto c_same = t.find_column({"first_last_same_university"});

  auto flag = [&](const csv::Row& row, std::size_t col) {
    const auto& v = row.fields[col];
    if (v == "1") return true;
    if (v == "0") return false;
    throw DataError(t.where(row) + ": column '" + t.header()[col] +
                    "' must be 0 or 1");
  };

  std::vector<PublicationRow> out;
  for (const auto& row : t.rows()) {
    PublicationRow p;
    p.dmu_id = row.fields[c_dmu];
    p.sds_id = row.fields[c_sds];
    auto& r = p.record;
    r.pub_id = row.fields[c_pub];
    r.year = csv::parse_int(t, row, c_year);
    r.citations = csv::parse_double(t, row, c_cit);
    r.categories = csv::split(row.fields[c_cat], ';');
    r.total_authors = csv::parse_int(t, row, c_auth);
    for (const auto& pos : csv::split(row.fields[c_pos], ';')) {
      std::istringstream in(pos);
      int v = 0;
      if (!(in >> v) || !in.eof()) {
        throw DataError(t.where(row) + ": bad author position '" + pos + "'");
      }
      r.dmu_author_positions.push_back(v);
    }
    r.life_science = flag(row, c_life);
    if (c_same && !row.fields[*c_same].empty()) {
      r.first_last_same_university = flag(row, *c_same);
    }
    try {
      r.validate();
    } catch (const DataError& e) {
      throw DataError(t.where(row) + ": " + e.what());
    }
    out.push_back(std::move(p));
  }
  return out;
}

MedianTable read_medians(const std::filesystem::path& path) {
  const auto t = csv::Table::read(path);
  const auto c_year = t.require_column({"year"});
  const auto c_cat = t.require_column({"category"});
  const auto c_med = t.require_column({"median"});
  const auto c_mean = t.find_column({"mean"});
  MedianTable table;
  for (const auto& row : t.rows()) {
    std::optional<double> mean;
    if (c_mean && !row.fields[*c_mean].empty()) {
      mean = csv::parse_double(t, row, *c_mean);
    }
    try {
      table.set(csv::parse_int(t, row, c_year), row.fields[c_cat],
                csv::parse_double(t, row, c_med), mean);
    } catch (const DataError& e) {
      throw DataError(t.where(row) + ": " + e.what());
    }
  }
  return table;
}

void cross_check(const AssessmentDataset& ds) {
  std::set<Key> staff_keys;
  for (const auto& s : ds.staff) {
    if (!staff_keys.insert({s.input.sds_id, s.input.dmu_id}).second) {
      throw DataError("duplicate staff row for " + s.input.dmu_id + " in " +
                      s.input.sds_id);
    }
  }

  std::set<Key> orphans;
  std::set<std::pair<int, std::string>> missing;
  for (const auto& p : ds.publications) {
    if (!staff_keys.count({p.sds_id, p.dmu_id})) {
      orphans.insert({p.sds_id, p.dmu_id});
    }
    for (const auto& cat : p.record.categories) {
      if (!ds.medians.contains(p.record.year, cat)) {
        missing.insert({p.record.year, cat});
      }
    }
  }
  if (!orphans.empty()) {
    std::ostringstream msg;
    msg << "publications reference unknown DMUs:";
    for (const auto& [sds, dmu] : orphans) msg << " (" << dmu << ", " << sds << ")";
    throw DataError(msg.str());
  }
  if (!missing.empty()) {
    std::ostringstream msg;
    msg << "missing median for:";
    for (const auto& [year, cat] : missing) msg << " (" << year << ", " << cat << ")";
    throw DataError(msg.str());
  }
  if (ds.mode == SsMode::kPassthrough) {
    for (const auto& s : ds.staff) {
      if (!s.ss) {
        throw DataError("no publications supplied and no ss for " +
                        s.input.dmu_id + " in " + s.input.sds_id);
      }
    }
  }
}

}  // namespace

std::string default_uda(const std::string& sds_id) {
  const auto slash = sds_id.find('/');
  return slash == std::string::npos ? sds_id : sds_id.substr(0, slash);
}

AssessmentDataset ingest(const InputFiles& files) {
  AssessmentDataset ds;
  ds.staff = read_staff(files.staff);
  if (files.publications) ds.publications = read_publications(*files.publications);
  if (files.medians) ds.medians = read_medians(*files.medians);
  ds.mode = ds.publications.empty() ? SsMode::kPassthrough : SsMode::kComputed;
  cross_check(ds);
  return ds;
}

AssessmentDataset ingest_report(const std::filesystem::path& report_json) {
  std::ifstream in(report_json);
  if (!in) throw IoError("cannot open " + report_json.string());
  AssessmentDataset ds;
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& sds : j.at("sds")) {
      const auto sds_id = sds.at("sds_id").get<std::string>();
      const auto uda = sds.at("uda").get<std::string>();
      for (const auto& d : sds.at("dmus")) {
        StaffRow s;
        s.input = DmuInput::make(d.at("dmu_id").get<std::string>(), sds_id,
                                 d.at("fp_years").get<double>(),
                                 d.at("ap_years").get<double>(),
                                 d.at("rf_years").get<double>());
        s.ss = d.at("ss").get<double>();
        s.uda = uda;
        ds.staff.push_back(std::move(s));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(report_json.string() + ": " + e.what());
  }
  ds.mode = SsMode::kPassthrough;
  cross_check(ds);
  return ds;
}

}  // namespace uniperf
