#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace voi::cli {

namespace {

Distribution normalize_loaded(std::vector<double> raw, const std::string& path) {
  double sum = 0.0;
  for (double x : raw) sum += x;
  if (std::abs(sum - 1.0) > 1e-2) {
    throw InvalidInput(errc::not_normalized,
                       path + ": parsed components sum to " + std::to_string(sum));
  }
  for (double& x : raw) x /= sum;
  return Distribution(std::move(raw));
}

}  // namespace

DistributionFile load_distribution(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput(errc::domain_error, "cannot open " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw InvalidInput(errc::empty, path + ": empty file");
  }

  if (text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const std::exception& e) {
      throw InvalidInput(errc::domain_error, path + ": JSON parse error: " + e.what());
    }
    if (!doc.contains("p") || !doc["p"].is_array()) {
      throw InvalidInput(errc::domain_error, path + ": missing \"p\" array");
    }
    std::vector<double> p;
    for (const auto& v : doc["p"]) {
      if (!v.is_number()) {
        throw InvalidInput(errc::domain_error, path + ": non-numeric entry in \"p\"");
      }
      p.push_back(v.get<double>());
    }
    std::string name = doc.value("name", std::string{});
    return DistributionFile{normalize_loaded(std::move(p), path), std::move(name)};
  }

  std::vector<double> p;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double x;
    while (fields >> x) p.push_back(x);
    fields.clear();
    std::string leftover;
    if (fields >> leftover) {
      throw InvalidInput(errc::domain_error, path + ": unparsable token '" + leftover + "'");
    }
  }
  return DistributionFile{normalize_loaded(std::move(p), path), {}};
}

void write_distribution(const std::string& path, const std::vector<double>& p,
                        const std::string& name) {
  Json doc;
  doc["p"] = p;
  if (!name.empty()) doc["name"] = name;
  std::ofstream out(path);
  if (!out) {
    throw InvalidInput(errc::domain_error, "cannot write " + path);
  }
  out << doc.dump() << "\n";
}

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json round12(const std::vector<double>& v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(round12(x));
  return arr;
}

std::string log_base_name(LogBase base) {
  switch (base) {
    case LogBase::two:
      return "2";
    case LogBase::ten:
      return "10";
    case LogBase::natural:
    default:
      return "e";
  }
}

LogBase parse_log_base(const std::string& name) {
  if (name == "e") return LogBase::natural;
  if (name == "2") return LogBase::two;
  if (name == "10") return LogBase::ten;
  throw InvalidInput(errc::domain_error, "unknown log base '" + name + "' (use e, 2 or 10)");
}

}  // namespace voi::cli
