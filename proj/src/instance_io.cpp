#include "hend/instance_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace hend {

using nlohmann::json;
using nlohmann::ordered_json;

std::string num17(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string num_str(double v) { return num17(v); }

double parse_num(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a numeric string");
    const std::string& s = j.get_ref<const std::string&>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw std::invalid_argument("bad number: " + s);
    return v;
}

ordered_json space_to_json(const GroundSpace& s) {
    ordered_json j;
    switch (s.backend()) {
        case GroundSpace::Backend::RealLine:
            j["type"] = "real_line";
            break;
        case GroundSpace::Backend::Euclidean:
            j["type"] = "euclidean";
            j["dim"] = s.dimension();
            break;
        case GroundSpace::Backend::PointCloud: {
            j["type"] = "point_cloud";
            ordered_json rows = ordered_json::array();
            for (const auto& row : s.table()) {
                ordered_json r = ordered_json::array();
                for (double v : row) r.push_back(num_str(v));
                rows.push_back(std::move(r));
            }
            j["dist"] = std::move(rows);
            break;
        }
    }
    return j;
}

SpacePtr space_from_json(const json& j, bool validated) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "real_line") return make_real_line();
    if (type == "euclidean") return make_euclidean(j.at("dim").get<std::size_t>());
    if (type == "point_cloud") {
        std::vector<std::vector<double>> table;
        for (const auto& row : j.at("dist")) {
            std::vector<double> r;
            for (const auto& v : row) r.push_back(parse_num(v));
            table.push_back(std::move(r));
        }
        return make_point_cloud(std::move(table), validated);
    }
    throw std::invalid_argument("unknown space type: " + type);
}

ordered_json point_to_json(const GroundSpace& s, const Point& p) {
    if (s.backend() == GroundSpace::Backend::PointCloud) return p.id;
    ordered_json j = ordered_json::array();
    for (double c : p.coords) j.push_back(num_str(c));
    return j;
}

Point point_from_json(const GroundSpace& s, const json& j) {
    if (s.backend() == GroundSpace::Backend::PointCloud) {
        const std::size_t id = j.get<std::size_t>();
        if (id >= s.cloud_size()) throw std::invalid_argument("point id out of range");
        return Point::cloud(id);
    }
    std::vector<double> coords;
    for (const auto& c : j) coords.push_back(parse_num(c));
    if (coords.size() != s.dimension())
        throw std::invalid_argument("point dimension mismatch");
    return Point{0, std::move(coords)};
}

ordered_json set_to_json(const GroundSpace& s, const GroundSet& g) {
    ordered_json j;
    switch (g.kind()) {
        case GroundSet::Kind::Empty:
            j["kind"] = "empty";
            break;
        case GroundSet::Kind::Points: {
            j["kind"] = "points";
            ordered_json pts = ordered_json::array();
            for (const Point& p : g.pts()) pts.push_back(point_to_json(s, p));
            j["points"] = std::move(pts);
            break;
        }
        case GroundSet::Kind::Intervals: {
            j["kind"] = "intervals";
            ordered_json ivs = ordered_json::array();
            for (const Interval& iv : g.ivs())
                ivs.push_back(ordered_json::array({num_str(iv.lo), num_str(iv.hi)}));
            j["intervals"] = std::move(ivs);
            break;
        }
    }
    return j;
}

GroundSet set_from_json(const GroundSpace& s, const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "empty") return GroundSet::empty();
    if (kind == "points") {
        std::vector<Point> pts;
        for (const auto& p : j.at("points")) pts.push_back(point_from_json(s, p));
        return GroundSet::points(std::move(pts));
    }
    if (kind == "intervals") {
        if (s.backend() != GroundSpace::Backend::RealLine)
            throw std::invalid_argument("interval sets need the real line");
        std::vector<Interval> ivs;
        for (const auto& iv : j.at("intervals"))
            ivs.push_back(Interval{parse_num(iv.at(0)), parse_num(iv.at(1))});
        return GroundSet::intervals(std::move(ivs));
    }
    throw std::invalid_argument("unknown set kind: " + kind);
}

ordered_json fuzzy_to_json(const StepFuzzySet& u) {
    ordered_json j;
    ordered_json levels = ordered_json::array();
    for (double a : u.levels()) levels.push_back(num_str(a));
    j["levels"] = std::move(levels);
    ordered_json cuts = ordered_json::array();
    for (const GroundSet& c : u.cuts()) cuts.push_back(set_to_json(*u.space(), c));
    j["cuts"] = std::move(cuts);
    return j;
}

StepFuzzySet fuzzy_from_json(const SpacePtr& s, const json& j) {
    std::vector<double> levels;
    for (const auto& a : j.at("levels")) levels.push_back(parse_num(a));
    std::vector<GroundSet> cuts;
    for (const auto& c : j.at("cuts")) cuts.push_back(set_from_json(*s, c));
    return StepFuzzySet::from_cuts(s, std::move(levels), std::move(cuts));
}

const char* kind_name(InstanceRecord::Kind k) {
    switch (k) {
        case InstanceRecord::Kind::Set: return "set";
        case InstanceRecord::Kind::Fuzzy: return "fuzzy";
        case InstanceRecord::Kind::Family: return "family";
        case InstanceRecord::Kind::Sequence: return "sequence";
    }
    return "set";
}

}  // namespace

InstanceRecord InstanceRecord::of_set(SpacePtr space, GroundSet s, InstanceMeta m) {
    InstanceRecord r;
    r.kind = Kind::Set;
    r.space = std::move(space);
    r.set = std::move(s);
    r.meta = std::move(m);
    return r;
}

InstanceRecord InstanceRecord::of_fuzzy(StepFuzzySet u, InstanceMeta m) {
    InstanceRecord r;
    r.kind = Kind::Fuzzy;
    r.space = u.space();
    r.members.push_back(std::move(u));
    r.meta = std::move(m);
    return r;
}

InstanceRecord InstanceRecord::of_family(FuzzyFamily fam, InstanceMeta m) {
    if (fam.members.empty()) throw std::invalid_argument("family record needs members");
    InstanceRecord r;
    r.kind = Kind::Family;
    r.space = fam.members.front().space();
    r.members = std::move(fam.members);
    r.height_tag = fam.height_tag;
    r.meta = std::move(m);
    return r;
}

InstanceRecord InstanceRecord::of_sequence(FuzzySeqWindow w, InstanceMeta m) {
    if (w.members.empty()) throw std::invalid_argument("sequence record needs members");
    InstanceRecord r;
    r.kind = Kind::Sequence;
    r.space = w.members.front().space();
    r.members = std::move(w.members);
    r.tail_start = w.tail_start;
    r.meta = std::move(m);
    return r;
}

FuzzyFamily InstanceRecord::as_family() const {
    if (kind != Kind::Family && kind != Kind::Sequence && kind != Kind::Fuzzy)
        throw std::invalid_argument("record holds no fuzzy sets");
    return FuzzyFamily{members, height_tag};
}

FuzzySeqWindow InstanceRecord::as_sequence() const {
    if (kind != Kind::Sequence && kind != Kind::Family && kind != Kind::Fuzzy)
        throw std::invalid_argument("record holds no fuzzy sets");
    return FuzzySeqWindow{members, kind == Kind::Sequence ? tail_start : 1};
}

std::string emit_record(const InstanceRecord& rec) {
    if (!rec.space) throw std::invalid_argument("record has no space");
    ordered_json j;
    j["kind"] = kind_name(rec.kind);
    j["space"] = space_to_json(*rec.space);
    ordered_json payload;
    switch (rec.kind) {
        case InstanceRecord::Kind::Set:
            payload = set_to_json(*rec.space, rec.set);
            break;
        case InstanceRecord::Kind::Fuzzy:
            if (rec.members.size() != 1)
                throw std::invalid_argument("fuzzy record needs exactly one member");
            payload = fuzzy_to_json(rec.members.front());
            break;
        case InstanceRecord::Kind::Family: {
            ordered_json ms = ordered_json::array();
            for (const StepFuzzySet& u : rec.members) ms.push_back(fuzzy_to_json(u));
            payload["members"] = std::move(ms);
            if (rec.height_tag) payload["height_tag"] = num_str(*rec.height_tag);
            break;
        }
        case InstanceRecord::Kind::Sequence: {
            ordered_json ms = ordered_json::array();
            for (const StepFuzzySet& u : rec.members) ms.push_back(fuzzy_to_json(u));
            payload["members"] = std::move(ms);
            payload["tail_start"] = rec.tail_start;
            break;
        }
    }
    j["payload"] = std::move(payload);
    ordered_json meta;
    meta["seed"] = rec.meta.seed;
    meta["generator"] = rec.meta.generator;
    meta["validated"] = rec.meta.validated;
    j["metadata"] = std::move(meta);
    return j.dump();
}

InstanceRecord parse_record(const std::string& line) {
    const json j = json::parse(line);
    InstanceRecord rec;
    const auto& meta = j.at("metadata");
    rec.meta.seed = meta.at("seed").get<std::uint64_t>();
    rec.meta.generator = meta.at("generator").get<std::string>();
    rec.meta.validated = meta.at("validated").get<bool>();
    rec.space = space_from_json(j.at("space"), rec.meta.validated);

    const std::string kind = j.at("kind").get<std::string>();
    const auto& payload = j.at("payload");
    if (kind == "set") {
        rec.kind = InstanceRecord::Kind::Set;
        rec.set = set_from_json(*rec.space, payload);
    } else if (kind == "fuzzy") {
        rec.kind = InstanceRecord::Kind::Fuzzy;
        rec.members.push_back(fuzzy_from_json(rec.space, payload));
    } else if (kind == "family" || kind == "sequence") {
        rec.kind = kind == "family" ? InstanceRecord::Kind::Family
                                    : InstanceRecord::Kind::Sequence;
        for (const auto& m : payload.at("members"))
            rec.members.push_back(fuzzy_from_json(rec.space, m));
        if (rec.members.empty()) throw std::invalid_argument("record needs members");
        if (kind == "family" && payload.contains("height_tag"))
            rec.height_tag = parse_num(payload.at("height_tag"));
        if (kind == "sequence") rec.tail_start = payload.at("tail_start").get<std::size_t>();
    } else {
        throw std::invalid_argument("unknown record kind: " + kind);
    }
    return rec;
}

void write_instances(std::ostream& out, const std::vector<InstanceRecord>& recs) {
    for (const InstanceRecord& r : recs) out << emit_record(r) << '\n';
}

std::vector<InstanceRecord> read_instances(std::istream& in) {
    std::vector<InstanceRecord> recs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            recs.push_back(parse_record(line));
        } catch (const std::exception& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return recs;
}

}  // namespace hend
