#include "qmcdip/input.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qmcdip/fixtures.hpp"

namespace qmcdip {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

double parse_double(const Token& t, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(t.text, &pos);
    if (pos != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, t.column, "expected a number, got '" + t.text + "'");
  }
}

int parse_int(const Token& t, int line) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(t.text, &pos);
    if (pos != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
  }
}

// splits "key=value"; returns false when the token has no '='
bool split_kv(const Token& t, std::string& key, std::string& value) {
  const auto eq = t.text.find('=');
  if (eq == std::string::npos) return false;
  key = t.text.substr(0, eq);
  value = t.text.substr(eq + 1);
  return true;
}

std::vector<double> parse_double_list(const std::string& csv, const Token& t, int line) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ParseError(line, t.column, "expected a comma-separated number list, got '" + csv + "'");
    }
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

SystemDescription parse_system(const std::string& text) {
  SystemDescription sys;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::string section;
  int section_line = 0;

  Orbital* open_orbital = nullptr;
  SemilocalECP* open_ecp = nullptr;
  bool saw_reference = false;

  std::map<std::string, int> section_lines;

  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const Token& head = tokens[0];
    if (head.text.front() == '[') {
      if (head.text.back() != ']' || tokens.size() != 1) {
        throw ParseError(lineno, head.column, "malformed section header");
      }
      if (open_orbital) throw ParseError(lineno, head.column, "orbital block not closed with 'end'");
      if (open_ecp) throw ParseError(lineno, head.column, "ecp block not closed with 'end'");
      section = head.text.substr(1, head.text.size() - 2);
      section_line = lineno;
      if (section != "geometry" && section != "orbitals" && section != "ecp" &&
          section != "determinants" && section != "jastrow" && section != "run") {
        throw ParseError(lineno, head.column, "unknown section [" + section + "]");
      }
      section_lines[section] = lineno;
      continue;
    }
    if (section.empty()) throw ParseError(lineno, head.column, "content before any section header");

    if (section == "geometry") {
      if (head.text == "nucleus") {
        if (tokens.size() < 5) throw ParseError(lineno, head.column, "nucleus needs: charge x y z");
        Nucleus n;
        n.charge = parse_double(tokens[1], lineno);
        n.position = Vec3(parse_double(tokens[2], lineno), parse_double(tokens[3], lineno),
                          parse_double(tokens[4], lineno));
        for (std::size_t t = 5; t < tokens.size(); ++t) {
          std::string k, v;
          if (!split_kv(tokens[t], k, v)) throw ParseError(lineno, tokens[t].column, "expected key=value");
          if (k == "ecp") {
            n.ecp_id = v;
          } else if (k == "zfull") {
            n.z_full = parse_double({v, tokens[t].column}, lineno);
          } else {
            throw ParseError(lineno, tokens[t].column, "unknown nucleus option '" + k + "'");
          }
        }
        sys.geometry.nuclei.push_back(std::move(n));
      } else if (head.text == "electrons") {
        if (tokens.size() != 3) throw ParseError(lineno, head.column, "electrons needs: n_up n_down");
        sys.geometry.n_up = parse_int(tokens[1], lineno);
        sys.geometry.n_down = parse_int(tokens[2], lineno);
      } else {
        throw ParseError(lineno, head.column, "unknown geometry directive '" + head.text + "'");
      }
    } else if (section == "orbitals") {
      if (head.text == "orbital") {
        if (open_orbital) throw ParseError(lineno, head.column, "previous orbital block not closed");
        if (tokens.size() != 2) throw ParseError(lineno, head.column, "orbital needs a label");
        sys.orbitals.orbitals.push_back(Orbital{tokens[1].text, {}, {}});
        open_orbital = &sys.orbitals.orbitals.back();
      } else if (head.text == "end") {
        if (!open_orbital) throw ParseError(lineno, head.column, "'end' outside an orbital block");
        open_orbital = nullptr;
      } else if (head.text == "gauss") {
        if (!open_orbital) throw ParseError(lineno, head.column, "primitive outside an orbital block");
        if (tokens.size() != 7) {
          throw ParseError(lineno, head.column, "gauss needs: lx ly lz alpha coeff center");
        }
        GaussianPrimitive p;
        p.lx = parse_int(tokens[1], lineno);
        p.ly = parse_int(tokens[2], lineno);
        p.lz = parse_int(tokens[3], lineno);
        p.alpha = parse_double(tokens[4], lineno);
        p.coeff = parse_double(tokens[5], lineno);
        p.center = parse_int(tokens[6], lineno);
        open_orbital->gaussians.push_back(p);
      } else if (head.text == "slater") {
        if (!open_orbital) throw ParseError(lineno, head.column, "primitive outside an orbital block");
        if (tokens.size() != 5) throw ParseError(lineno, head.column, "slater needs: rpow zeta coeff center");
        SlaterPrimitive p;
        p.rpow = parse_int(tokens[1], lineno);
        p.zeta = parse_double(tokens[2], lineno);
        p.coeff = parse_double(tokens[3], lineno);
        p.center = parse_int(tokens[4], lineno);
        open_orbital->slaters.push_back(p);
      } else if (head.text == "slaterp") {
        if (!open_orbital) throw ParseError(lineno, head.column, "primitive outside an orbital block");
        if (tokens.size() != 5) throw ParseError(lineno, head.column, "slaterp needs: axis zeta coeff center");
        SlaterPrimitive p;
        const std::string& ax = tokens[1].text;
        if (ax == "x") p.axis = 0;
        else if (ax == "y") p.axis = 1;
        else if (ax == "z") p.axis = 2;
        else throw ParseError(lineno, tokens[1].column, "slaterp axis must be x, y or z");
        p.zeta = parse_double(tokens[2], lineno);
        p.coeff = parse_double(tokens[3], lineno);
        p.center = parse_int(tokens[4], lineno);
        open_orbital->slaters.push_back(p);
      } else {
        throw ParseError(lineno, head.column, "unknown orbitals directive '" + head.text + "'");
      }
    } else if (section == "ecp") {
      if (head.text == "ecp") {
        if (open_ecp) throw ParseError(lineno, head.column, "previous ecp block not closed");
        if (tokens.size() < 3) throw ParseError(lineno, head.column, "ecp needs: name zcore=<value>");
        SemilocalECP ecp;
        ecp.name = tokens[1].text;
        std::string k, v;
        if (!split_kv(tokens[2], k, v) || k != "zcore") {
          throw ParseError(lineno, tokens[2].column, "expected zcore=<value>");
        }
        ecp.z_core = parse_double({v, tokens[2].column}, lineno);
        auto [it, inserted] = sys.ecps.emplace(ecp.name, std::move(ecp));
        if (!inserted) throw ParseError(lineno, tokens[1].column, "duplicate ecp name '" + it->first + "'");
        open_ecp = &it->second;
      } else if (head.text == "end") {
        if (!open_ecp) throw ParseError(lineno, head.column, "'end' outside an ecp block");
        open_ecp = nullptr;
      } else if (head.text == "local") {
        if (!open_ecp) throw ParseError(lineno, head.column, "channel line outside an ecp block");
        if (tokens.size() != 4) throw ParseError(lineno, head.column, "local needs: n alpha c");
        open_ecp->local.push_back({parse_int(tokens[1], lineno), parse_double(tokens[2], lineno),
                                   parse_double(tokens[3], lineno)});
      } else if (head.text == "nonlocal") {
        if (!open_ecp) throw ParseError(lineno, head.column, "channel line outside an ecp block");
        if (tokens.size() != 5) throw ParseError(lineno, head.column, "nonlocal needs: l n alpha c");
        const int l = parse_int(tokens[1], lineno);
        EcpChannel* channel = nullptr;
        for (auto& c : open_ecp->nonlocal)
          if (c.l == l) channel = &c;
        if (!channel) {
          open_ecp->nonlocal.push_back({l, {}});
          channel = &open_ecp->nonlocal.back();
        }
        channel->terms.push_back({parse_int(tokens[2], lineno), parse_double(tokens[3], lineno),
                                  parse_double(tokens[4], lineno)});
      } else {
        throw ParseError(lineno, head.column, "unknown ecp directive '" + head.text + "'");
      }
    } else if (section == "determinants") {
      if (head.text == "csf") {
        if (tokens.size() < 4) throw ParseError(lineno, head.column, "csf needs: coeff up <i...> down <j...>");
        Csf csf;
        csf.coeff = parse_double(tokens[1], lineno);
        if (tokens[2].text != "up") throw ParseError(lineno, tokens[2].column, "expected 'up'");
        std::size_t t = 3;
        while (t < tokens.size() && tokens[t].text != "down") {
          csf.up.push_back(parse_int(tokens[t], lineno));
          ++t;
        }
        if (t >= tokens.size()) throw ParseError(lineno, head.column, "expected 'down' in csf line");
        ++t;
        while (t < tokens.size()) {
          csf.down.push_back(parse_int(tokens[t], lineno));
          ++t;
        }
        sys.expansion.csfs.push_back(std::move(csf));
        sys.has_expansion = true;
      } else if (head.text == "reference") {
        if (tokens.size() != 2) throw ParseError(lineno, head.column, "reference needs an index");
        sys.expansion.reference = parse_int(tokens[1], lineno);
        saw_reference = true;
      } else {
        throw ParseError(lineno, head.column, "unknown determinants directive '" + head.text + "'");
      }
    } else if (section == "jastrow") {
      auto read_pade = [&](PadePolyTerm& term, std::size_t first) {
        for (std::size_t t = first; t < tokens.size(); ++t) {
          std::string k, v;
          if (!split_kv(tokens[t], k, v)) throw ParseError(lineno, tokens[t].column, "expected key=value");
          Token vt{v, tokens[t].column};
          if (k == "b1") term.b1 = parse_double(vt, lineno);
          else if (k == "b2") term.b2 = parse_double(vt, lineno);
          else if (k == "cutoff") term.cutoff = parse_double(vt, lineno);
          else if (k == "poly") term.poly = parse_double_list(v, tokens[t], lineno);
          else throw ParseError(lineno, tokens[t].column, "unknown jastrow option '" + k + "'");
        }
      };
      if (head.text == "cusp") {
        if (tokens.size() != 2 || (tokens[1].text != "on" && tokens[1].text != "off")) {
          throw ParseError(lineno, head.column, "cusp needs 'on' or 'off'");
        }
        sys.jastrow.enforce_ee_cusps = tokens[1].text == "on";
      } else if (head.text == "en") {
        if (tokens.size() < 2) throw ParseError(lineno, head.column, "en needs a species index");
        const int species = parse_int(tokens[1], lineno);
        if (species < 0) throw ParseError(lineno, tokens[1].column, "species index must be >= 0");
        if (static_cast<int>(sys.jastrow.en.size()) <= species) sys.jastrow.en.resize(species + 1);
        read_pade(sys.jastrow.en[species], 2);
      } else if (head.text == "ee") {
        if (tokens.size() < 2 || (tokens[1].text != "anti" && tokens[1].text != "para")) {
          throw ParseError(lineno, head.column, "ee needs 'anti' or 'para'");
        }
        read_pade(tokens[1].text == "anti" ? sys.jastrow.ee_anti : sys.jastrow.ee_para, 2);
      } else if (head.text == "een") {
        if (tokens.size() < 2) throw ParseError(lineno, head.column, "een needs a species index");
        ThreeBodyTerm term;
        term.species = parse_int(tokens[1], lineno);
        for (std::size_t t = 2; t < tokens.size(); ++t) {
          std::string k, v;
          if (!split_kv(tokens[t], k, v)) throw ParseError(lineno, tokens[t].column, "expected key=value");
          Token vt{v, tokens[t].column};
          if (k == "m") term.m = parse_int(vt, lineno);
          else if (k == "n") term.n = parse_int(vt, lineno);
          else if (k == "o") term.o = parse_int(vt, lineno);
          else if (k == "c") term.coeff = parse_double(vt, lineno);
          else if (k == "cutoff") term.cutoff = parse_double(vt, lineno);
          else throw ParseError(lineno, tokens[t].column, "unknown een option '" + k + "'");
        }
        sys.jastrow.een.push_back(term);
      } else {
        throw ParseError(lineno, head.column, "unknown jastrow directive '" + head.text + "'");
      }
    } else if (section == "run") {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError(lineno, head.column, "run entries use key = value");
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) throw ParseError(lineno, head.column, "empty run key");
      sys.run[key] = value;
    }
  }
  if (open_orbital) throw ParseError(lineno, 1, "orbital block not closed with 'end'");
  if (open_ecp) throw ParseError(lineno, 1, "ecp block not closed with 'end'");

  // ----- semantic validation -----
  auto section_ref = [&](const std::string& s) {
    auto it = section_lines.find(s);
    return it == section_lines.end() ? 1 : it->second;
  };
  try {
    sys.geometry.validate();
  } catch (const std::exception& e) {
    throw ParseError(section_ref("geometry"), 0, e.what());
  }
  try {
    sys.orbitals.validate(sys.geometry);
  } catch (const std::exception& e) {
    throw ParseError(section_ref("orbitals"), 0, e.what());
  }
  for (const auto& [name, ecp] : sys.ecps) {
    try {
      ecp.validate();
    } catch (const std::exception& e) {
      throw ParseError(section_ref("ecp"), 0, e.what());
    }
  }
  for (const auto& n : sys.geometry.nuclei) {
    if (!n.ecp_id) continue;
    auto it = sys.ecps.find(*n.ecp_id);
    if (it == sys.ecps.end()) {
      throw ParseError(section_ref("geometry"), 0, "nucleus references unknown ECP '" + *n.ecp_id + "'");
    }
    if (n.z_full && std::abs(n.charge - (*n.z_full - it->second.z_core)) > 1e-12) {
      throw ParseError(section_ref("geometry"), 0,
                       "nucleus charge must equal zfull - zcore of ECP '" + *n.ecp_id + "'");
    }
  }
  if (sys.has_expansion) {
    const int norb = sys.orbitals.size();
    if (sys.geometry.n_up > norb || sys.geometry.n_down > norb) {
      throw ParseError(section_ref("determinants"), 0,
                       "electron count (" + std::to_string(std::max(sys.geometry.n_up, sys.geometry.n_down)) +
                           ") exceeds the orbital count (" + std::to_string(norb) + ") for one spin");
    }
    if (!saw_reference) sys.expansion.reference = 0;
    try {
      sys.expansion.validate(sys.geometry.n_up, sys.geometry.n_down, norb);
    } catch (const std::exception& e) {
      throw ParseError(section_ref("determinants"), 0, e.what());
    }
  }
  try {
    sys.jastrow.validate(sys.geometry.n_species());
  } catch (const std::exception& e) {
    throw ParseError(section_ref("jastrow"), 0, e.what());
  }
  return sys;
}

std::string serialize_system(const SystemDescription& s) {
  std::ostringstream out;
  out << "[geometry]\n";
  for (const auto& n : s.geometry.nuclei) {
    out << "nucleus " << fmt(n.charge) << " " << fmt(n.position.x()) << " " << fmt(n.position.y()) << " "
        << fmt(n.position.z());
    if (n.ecp_id) out << " ecp=" << *n.ecp_id;
    if (n.z_full) out << " zfull=" << fmt(*n.z_full);
    out << "\n";
  }
  out << "electrons " << s.geometry.n_up << " " << s.geometry.n_down << "\n";

  if (s.orbitals.size() > 0) {
    out << "\n[orbitals]\n";
    for (const auto& orb : s.orbitals.orbitals) {
      out << "orbital " << orb.label << "\n";
      for (const auto& p : orb.gaussians) {
        out << "gauss " << p.lx << " " << p.ly << " " << p.lz << " " << fmt(p.alpha) << " " << fmt(p.coeff)
            << " " << p.center << "\n";
      }
      for (const auto& p : orb.slaters) {
        if (p.axis < 0) {
          out << "slater " << p.rpow << " " << fmt(p.zeta) << " " << fmt(p.coeff) << " " << p.center << "\n";
        } else {
          out << "slaterp " << "xyz"[p.axis] << " " << fmt(p.zeta) << " " << fmt(p.coeff) << " " << p.center
              << "\n";
        }
      }
      out << "end\n";
    }
  }

  if (!s.ecps.empty()) {
    out << "\n[ecp]\n";
    for (const auto& [name, ecp] : s.ecps) {
      out << "ecp " << name << " zcore=" << fmt(ecp.z_core) << "\n";
      for (const auto& t : ecp.local) out << "local " << t.n << " " << fmt(t.alpha) << " " << fmt(t.coeff) << "\n";
      for (const auto& ch : ecp.nonlocal) {
        for (const auto& t : ch.terms) {
          out << "nonlocal " << ch.l << " " << t.n << " " << fmt(t.alpha) << " " << fmt(t.coeff) << "\n";
        }
      }
      out << "end\n";
    }
  }

  if (s.has_expansion) {
    out << "\n[determinants]\n";
    for (const auto& c : s.expansion.csfs) {
      out << "csf " << fmt(c.coeff) << " up";
      for (int i : c.up) out << " " << i;
      out << " down";
      for (int i : c.down) out << " " << i;
      out << "\n";
    }
    out << "reference " << s.expansion.reference << "\n";
  }

  {
    std::ostringstream jtxt;
    auto pade = [&](const PadePolyTerm& t) {
      jtxt << " b1=" << fmt(t.b1) << " b2=" << fmt(t.b2);
      if (t.cutoff > 0.0) jtxt << " cutoff=" << fmt(t.cutoff);
      if (!t.poly.empty()) {
        jtxt << " poly=";
        for (std::size_t i = 0; i < t.poly.size(); ++i) jtxt << (i ? "," : "") << fmt(t.poly[i]);
      }
      jtxt << "\n";
    };
    std::ostringstream body;
    body << "cusp " << (s.jastrow.enforce_ee_cusps ? "on" : "off") << "\n";
    bool any = s.jastrow.enforce_ee_cusps;
    for (std::size_t sp = 0; sp < s.jastrow.en.size(); ++sp) {
      if (s.jastrow.en[sp].is_zero()) continue;
      jtxt.str("");
      pade(s.jastrow.en[sp]);
      body << "en " << sp << jtxt.str();
      any = true;
    }
    if (!s.jastrow.ee_anti.is_zero()) {
      jtxt.str("");
      pade(s.jastrow.ee_anti);
      body << "ee anti" << jtxt.str();
      any = true;
    }
    if (!s.jastrow.ee_para.is_zero()) {
      jtxt.str("");
      pade(s.jastrow.ee_para);
      body << "ee para" << jtxt.str();
      any = true;
    }
    for (const auto& t : s.jastrow.een) {
      body << "een " << t.species << " m=" << t.m << " n=" << t.n << " o=" << t.o << " c=" << fmt(t.coeff)
           << " cutoff=" << fmt(t.cutoff) << "\n";
      any = true;
    }
    if (any) out << "\n[jastrow]\n" << body.str();
  }

  if (!s.run.empty()) {
    out << "\n[run]\n";
    for (const auto& [k, v] : s.run) out << k << " = " << v << "\n";
  }
  return out.str();
}

TrialWavefunction SystemDescription::make_wavefunction(double csf_cutoff) const {
  if (!has_expansion) {
    throw ConfigError("system has no [determinants] section; cannot build a trial wavefunction");
  }
  DeterminantExpansion exp = expansion;
  if (csf_cutoff > 0.0) exp = truncate_expansion(exp, csf_cutoff);
  return TrialWavefunction::build(geometry, orbitals, std::move(exp), jastrow);
}

Hamiltonian SystemDescription::make_hamiltonian(int ecp_quad_order) const {
  return Hamiltonian(geometry, ecps, ecp_quad_order);
}

double SystemDescription::run_value(const std::string& key, double fallback) const {
  auto it = run.find(key);
  if (it == run.end()) return fallback;
  return std::stod(it->second);
}

std::string load_system_text(const std::string& path_or_fixture) {
  if (path_or_fixture.rfind("fixture:", 0) == 0) {
    return fixtures::text(path_or_fixture.substr(8));
  }
  std::ifstream in(path_or_fixture);
  if (!in) throw ConfigError("cannot open system file '" + path_or_fixture + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SystemDescription load_system(const std::string& path_or_fixture) {
  return parse_system(load_system_text(path_or_fixture));
}

}  // namespace qmcdip
