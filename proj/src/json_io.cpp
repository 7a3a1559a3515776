#include "mongedomp/json_io.hpp"

#include <istream>
#include <ostream>
#include <vector>

#include "json.hpp"

namespace mongedomp {

namespace {

using nlohmann::json;

json parse_stream(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<Money> money_cells(const json& arr) {
  std::vector<Money> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(Money{v.get<std::int64_t>()});
  return out;
}

}  // namespace

TpInstance read_tp_json(std::istream& in) {
  const json j = parse_stream(in);
  try {
    const int p = j.at("p").get<int>();
    const int q = j.at("q").get<int>();
    auto s = j.at("s").get<std::vector<std::int64_t>>();
    auto d = j.at("d").get<std::vector<std::int64_t>>();
    if (p < 1 || q < 1 ||
        j.at("cost_scaled").size() != static_cast<std::size_t>(p) * q) {
      throw ParseError("cost_scaled must hold p*q entries");
    }
    return TpInstance(std::move(s), std::move(d),
                      MoneyMatrix(p, q, money_cells(j.at("cost_scaled"))));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad transportation document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad transportation document: ") + e.what());
  }
}

void write_tp_json(std::ostream& out, const TpInstance& inst) {
  json j;
  j["p"] = inst.p;
  j["q"] = inst.q;
  j["s"] = inst.supply;
  j["d"] = inst.demand;
  std::vector<std::int64_t> cells;
  cells.reserve(static_cast<std::size_t>(inst.p) * inst.q);
  for (int i = 0; i < inst.p; ++i) {
    for (int k = 0; k < inst.q; ++k) cells.push_back(inst.cost(i, k).scaled());
  }
  j["cost_scaled"] = cells;
  out << j.dump(2) << '\n';
}

DompDocument read_domp_json(std::istream& in) {
  const json j = parse_stream(in);
  try {
    const int n = j.at("n").get<int>();
    const int p = j.at("p").get<int>();
    auto lambda = j.at("lambda").get<std::vector<std::int64_t>>();
    if (n < 1 ||
        j.at("cost_scaled").size() != static_cast<std::size_t>(n) * n) {
      throw ParseError("cost_scaled must hold n*n entries");
    }
    DompInstance inst(n, p, MoneyMatrix(n, n, money_cells(j.at("cost_scaled"))),
                      std::move(lambda));
    std::optional<InstanceMeta> meta;
    if (j.contains("meta")) {
      InstanceMeta m;
      m.seed = j.at("meta").at("seed").get<std::uint64_t>();
      m.family = j.at("meta").at("family").get<std::string>();
      meta = std::move(m);
    }
    return {std::move(inst), std::move(meta)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad instance document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad instance document: ") + e.what());
  }
}

void write_domp_json(std::ostream& out, const DompInstance& inst,
                     const std::optional<InstanceMeta>& meta) {
  json j;
  j["n"] = inst.n;
  j["p"] = inst.p;
  std::vector<std::int64_t> cells;
  cells.reserve(static_cast<std::size_t>(inst.n) * inst.n);
  for (int i = 0; i < inst.n; ++i) {
    for (int k = 0; k < inst.n; ++k) cells.push_back(inst.cost(i, k).scaled());
  }
  j["cost_scaled"] = cells;
  j["lambda"] = inst.lambda;
  if (meta) {
    j["meta"] = {{"seed", meta->seed}, {"family", meta->family}};
  }
  out << j.dump(2) << '\n';
}

}  // namespace mongedomp
