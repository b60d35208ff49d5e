#include "hw4k/serialize.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace hw4k {

namespace {

using ordered_json = nlohmann::ordered_json;

FactorKind kind_from_string(const std::string& s) {
    if (s == "hamilton") return FactorKind::hamilton;
    if (s == "c4k") return FactorKind::c4k;
    throw ParseError("unknown factor kind: " + s);
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["n"] = cert.n;
    j["k"] = cert.k ? ordered_json(*cert.k) : ordered_json(nullptr);
    j["t"] = cert.t ? ordered_json(*cert.t) : ordered_json(nullptr);
    j["r"] = cert.r;
    j["s"] = cert.s;
    j["factors"] = ordered_json::array();
    for (const auto& f : cert.factors) {
        ordered_json jf;
        jf["kind"] = to_string(f.kind);
        jf["cycles"] = f.cycles;
        j["factors"].push_back(std::move(jf));
    }
    if (cert.one_factor) {
        auto arr = ordered_json::array();
        for (const Edge& e : *cert.one_factor) arr.push_back(ordered_json::array({e.u, e.v}));
        j["one_factor"] = std::move(arr);
    } else {
        j["one_factor"] = nullptr;
    }
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        Certificate cert;
        cert.n = j.at("n").get<int>();
        if (!j.at("k").is_null()) cert.k = j.at("k").get<int>();
        if (!j.at("t").is_null()) cert.t = j.at("t").get<int>();
        cert.r = j.at("r").get<int>();
        cert.s = j.at("s").get<int>();
        for (const auto& jf : j.at("factors")) {
            TwoFactor f;
            f.kind = kind_from_string(jf.at("kind").get<std::string>());
            f.cycles = jf.at("cycles").get<std::vector<std::vector<VertexId>>>();
            cert.factors.push_back(std::move(f));
        }
        if (!j.at("one_factor").is_null()) {
            cert.one_factor.emplace();
            for (const auto& je : j.at("one_factor")) {
                if (!je.is_array() || je.size() != 2) throw ParseError("one_factor entry is not a pair");
                const int a = je[0].get<int>(), b = je[1].get<int>();
                if (a == b) throw ParseError("one_factor contains a loop");
                cert.one_factor->emplace_back(a, b);
            }
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate JSON: ") + e.what());
    }
}

std::string certificate_to_text(const Certificate& cert) {
    std::ostringstream out;
    out << "n " << cert.n << "\n";
    out << "k " << (cert.k ? std::to_string(*cert.k) : "-") << "\n";
    out << "t " << (cert.t ? std::to_string(*cert.t) : "-") << "\n";
    out << "r " << cert.r << "\n";
    out << "s " << cert.s << "\n";
    for (const auto& f : cert.factors) {
        out << "factor " << to_string(f.kind) << ":";
        for (const auto& c : f.cycles) {
            out << " cycle";
            for (VertexId v : c) out << " " << v;
        }
        out << "\n";
    }
    if (cert.one_factor) {
        out << "one_factor:";
        for (const Edge& e : *cert.one_factor) out << " edge " << e.u << " " << e.v;
        out << "\n";
    }
    return out.str();
}

Certificate certificate_from_text(const std::string& text) {
    Certificate cert;
    bool saw_n = false;
    std::istringstream in(text);
    std::string line;
    auto parse_int = [](const std::string& tok, const std::string& what) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError("expected integer for " + what + ", got '" + tok + "'");
        }
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        std::string tok;
        if (head == "n" || head == "r" || head == "s") {
            if (!(ls >> tok)) throw ParseError("missing value for " + head);
            const int v = parse_int(tok, head);
            (head == "n" ? cert.n : head == "r" ? cert.r : cert.s) = v;
            if (head == "n") saw_n = true;
        } else if (head == "k" || head == "t") {
            if (!(ls >> tok)) throw ParseError("missing value for " + head);
            if (tok != "-") (head == "k" ? cert.k : cert.t) = parse_int(tok, head);
        } else if (head == "factor") {
            std::string kind;
            if (!(ls >> kind)) throw ParseError("missing factor kind");
            if (!kind.empty() && kind.back() == ':') kind.pop_back();
            TwoFactor f;
            f.kind = kind_from_string(kind);
            while (ls >> tok) {
                if (tok == "cycle") {
                    f.cycles.emplace_back();
                } else {
                    if (f.cycles.empty()) throw ParseError("vertex before 'cycle' keyword");
                    f.cycles.back().push_back(parse_int(tok, "vertex"));
                }
            }
            cert.factors.push_back(std::move(f));
        } else if (head == "one_factor:" || head == "one_factor") {
            cert.one_factor.emplace();
            while (ls >> tok) {
                if (tok != "edge") throw ParseError("expected 'edge' in one_factor line");
                std::string a, b;
                if (!(ls >> a >> b)) throw ParseError("truncated edge in one_factor line");
                const int u = parse_int(a, "edge endpoint"), v = parse_int(b, "edge endpoint");
                if (u == v) throw ParseError("one_factor contains a loop");
                cert.one_factor->emplace_back(u, v);
            }
        } else {
            throw ParseError("unrecognized line: " + line);
        }
    }
    if (!saw_n) throw ParseError("missing 'n' header line");
    return cert;
}

Certificate certificate_from_string(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? certificate_from_json(text) : certificate_from_text(text);
    }
    throw ParseError("empty certificate");
}

}  // namespace hw4k
