#include "isingecho/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "isingecho/config.hpp"
#include "json.hpp"

namespace isingecho {

namespace {

void write_file(const std::string& path, const std::string& content, const char* what) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error(std::string(what) + ": cannot open '" + path + "'");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!os) throw std::runtime_error(std::string(what) + ": write failed for '" + path + "'");
}

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void emit_csv(const SweepResult& result, std::ostream& os) {
    os << "lambda,t,L\n";
    const std::size_t nt = result.times.size();
    char buf[128];
    for (std::size_t i = 0; i < result.lambdas.size(); ++i) {
        for (std::size_t j = 0; j < nt; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", result.lambdas[i],
                          result.times[j], result.surface[i * nt + j]);
            os << buf;
        }
    }
}

void emit_csv(const SweepResult& result, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("emit_csv: cannot open '" + path + "'");
    emit_csv(result, os);
    if (!os) throw std::runtime_error("emit_csv: write failed for '" + path + "'");
}

void emit_json(const SweepResult& result, const std::string& path) {
    nlohmann::ordered_json j;
    j["config"] = sweep_config_to_json(result.config);
    j["lambda"] = result.lambdas;
    j["time"] = result.times;
    const std::size_t nt = result.times.size();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < result.lambdas.size(); ++i) {
        rows.push_back(std::vector<double>(result.surface.begin() + i * nt,
                                           result.surface.begin() + (i + 1) * nt));
    }
    j["surface"] = std::move(rows);
    j["metadata"] = {{"version", result.version},
                     {"wall_seconds", result.wall_seconds},
                     {"threads", result.threads},
                     {"grid", result.config.grid == GridConvention::PaperInteger
                                  ? "paper"
                                  : "antiperiodic"}};
    write_file(path, j.dump(2) + "\n", "emit_json");
}

namespace {

// shared plot frame: margins, axes, 10 ticks per axis, title
struct Frame {
    double W, H;
    double left = 70, right = 25, top = 45, bottom = 55;
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;  // data ranges

    double pw() const { return W - left - right; }
    double ph() const { return H - top - bottom; }
    double sx(double v) const {
        return x1 > x0 ? left + (v - x0) / (x1 - x0) * pw() : left + 0.5 * pw();
    }
    double sy(double v) const {
        return y1 > y0 ? top + ph() - (v - y0) / (y1 - y0) * ph() : top + 0.5 * ph();
    }
};

void svg_open(std::string& out, const Frame& f, const std::string& title) {
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt("%.0f", f.W) +
           "\" height=\"" + fmt("%.0f", f.H) + "\" viewBox=\"0 0 " + fmt("%.0f", f.W) + " " +
           fmt("%.0f", f.H) + "\">\n";
    out += "<rect width=\"" + fmt("%.0f", f.W) + "\" height=\"" + fmt("%.0f", f.H) +
           "\" fill=\"#ffffff\"/>\n";
    out += "<text x=\"" + fmt("%.1f", f.W / 2) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"15\">" +
           xml_escape(title) + "</text>\n";
}

void svg_axes(std::string& out, const Frame& f, double tick_x0, double tick_x1, double tick_y0,
              double tick_y1, const std::string& xlabel, const std::string& ylabel) {
    out += "<rect x=\"" + fmt("%.1f", f.left) + "\" y=\"" + fmt("%.1f", f.top) + "\" width=\"" +
           fmt("%.1f", f.pw()) + "\" height=\"" + fmt("%.1f", f.ph()) +
           "\" fill=\"none\" stroke=\"#000000\"/>\n";
    const int nticks = 10;
    for (int i = 0; i < nticks; ++i) {
        const double frac = nticks > 1 ? double(i) / (nticks - 1) : 0.5;
        const double vx = tick_x0 + frac * (tick_x1 - tick_x0);
        const double vy = tick_y0 + frac * (tick_y1 - tick_y0);
        const double px = f.sx(vx);
        const double py = f.sy(vy);
        const double ax_y = f.top + f.ph();
        out += "<line x1=\"" + fmt("%.1f", px) + "\" y1=\"" + fmt("%.1f", ax_y) + "\" x2=\"" +
               fmt("%.1f", px) + "\" y2=\"" + fmt("%.1f", ax_y + 5) + "\" stroke=\"#000000\"/>\n";
        out += "<text x=\"" + fmt("%.1f", px) + "\" y=\"" + fmt("%.1f", ax_y + 18) +
               "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">" +
               fmt("%.4g", vx) + "</text>\n";
        out += "<line x1=\"" + fmt("%.1f", f.left - 5) + "\" y1=\"" + fmt("%.1f", py) +
               "\" x2=\"" + fmt("%.1f", f.left) + "\" y2=\"" + fmt("%.1f", py) +
               "\" stroke=\"#000000\"/>\n";
        out += "<text x=\"" + fmt("%.1f", f.left - 8) + "\" y=\"" + fmt("%.1f", py + 4) +
               "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">" +
               fmt("%.4g", vy) + "</text>\n";
    }
    out += "<text x=\"" + fmt("%.1f", f.left + f.pw() / 2) + "\" y=\"" + fmt("%.1f", f.H - 12) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">" +
           xml_escape(xlabel) + "</text>\n";
    out += "<text transform=\"translate(16," + fmt("%.1f", f.top + f.ph() / 2) +
           ") rotate(-90)\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">" +
           xml_escape(ylabel) + "</text>\n";
}

const char* const kPalette[] = {"#000000", "#c0392b", "#2980b9", "#27ae60",
                                "#8e44ad", "#e67e22", "#16a085", "#7f8c8d"};

void curve_plot(std::string& out, const SvgStyle& style, const std::string& default_title,
                std::span<const std::vector<double>> xs, std::span<const std::vector<double>> ys,
                std::span<const std::string> labels) {
    Frame f;
    f.W = style.width;
    f.H = style.height;
    double tmin = 0.0, tmax = 1.0;
    bool first = true;
    for (const auto& x : xs) {
        for (double v : x) {
            if (first) tmin = tmax = v, first = false;
            tmin = std::min(tmin, v);
            tmax = std::max(tmax, v);
        }
    }
    f.x0 = tmin;
    f.x1 = tmax > tmin ? tmax : tmin + 1.0;
    f.y0 = 0.0;
    f.y1 = 1.0;
    svg_open(out, f, style.title.empty() ? default_title : style.title);
    svg_axes(out, f, tmin, tmax, 0.0, 1.0, "t [1/J]", "L");
    for (std::size_t c = 0; c < xs.size(); ++c) {
        const char* color = kPalette[c % (sizeof kPalette / sizeof *kPalette)];
        out += "<polyline fill=\"none\" stroke=\"";
        out += color;
        out += "\" stroke-width=\"1.4\" points=\"";
        for (std::size_t j = 0; j < xs[c].size(); ++j) {
            if (j) out += ' ';
            out += fmt("%.2f", f.sx(xs[c][j])) + "," + fmt("%.2f", f.sy(ys[c][j]));
        }
        out += "\"/>\n";
    }
    if (labels.size() > 1) {
        for (std::size_t c = 0; c < labels.size(); ++c) {
            const char* color = kPalette[c % (sizeof kPalette / sizeof *kPalette)];
            const double ly = f.top + 16 + 16.0 * c;
            const double lx = f.left + f.pw() - 130;
            out += "<line x1=\"" + fmt("%.1f", lx) + "\" y1=\"" + fmt("%.1f", ly - 4) +
                   "\" x2=\"" + fmt("%.1f", lx + 22) + "\" y2=\"" + fmt("%.1f", ly - 4) +
                   "\" stroke=\"";
            out += color;
            out += "\" stroke-width=\"2\"/>\n";
            out += "<text x=\"" + fmt("%.1f", lx + 28) + "\" y=\"" + fmt("%.1f", ly) +
                   "\" font-family=\"monospace\" font-size=\"12\">" + xml_escape(labels[c]) +
                   "</text>\n";
        }
    }
    out += "</svg>\n";
}

int gray_level(double v) {
    const double c = std::clamp(v, 0.0, 1.0);
    return static_cast<int>(std::lround(c * 255.0));
}

}  // namespace

void emit_svg(const SweepResult& result, const std::string& path, const SvgStyle& style) {
    const std::size_t nl = result.lambdas.size();
    const std::size_t nt = result.times.size();
    if (nl == 0 || nt == 0) throw std::invalid_argument("emit_svg: empty surface");

    std::string out;
    if (nl == 1) {
        // cross-section: a single-lambda sweep is just L(t)
        std::vector<std::vector<double>> xs{result.times};
        std::vector<std::vector<double>> ys{
            std::vector<double>(result.surface.begin(), result.surface.begin() + nt)};
        std::vector<std::string> labels;
        if (!style.labels.empty()) labels = style.labels;
        curve_plot(out, style,
                   "Loschmidt echo, lambda = " + fmt("%.4g", result.lambdas[0]),
                   xs, ys, labels);
        write_file(path, out, "emit_svg");
        return;
    }

    Frame f;
    f.W = style.width;
    f.H = style.height;
    const double lstep = result.config.lambda.scalar() ? 1.0 : result.config.lambda.step;
    const double tstep = result.config.time.scalar() ? 1.0 : result.config.time.step;
    // cell-edge ranges so ticks land on true grid values
    f.x0 = result.lambdas.front() - lstep / 2;
    f.x1 = result.lambdas.back() + lstep / 2;
    f.y0 = result.times.front() - tstep / 2;
    f.y1 = result.times.back() + tstep / 2;

    std::string title = style.title.empty() ? "Loschmidt echo L(lambda, t)" : style.title;
    svg_open(out, f, title);

    const double cw = f.pw() / double(nl);
    const double ch = f.ph() / double(nt);
    for (std::size_t i = 0; i < nl; ++i) {
        const double* row = result.surface.data() + i * nt;
        const double x = f.left + double(i) * cw;
        std::size_t j = 0;
        while (j < nt) {
            const int g = gray_level(row[j]);
            std::size_t j2 = j + 1;
            while (j2 < nt && gray_level(row[j2]) == g) ++j2;
            // run j..j2-1, t increases upward
            const double y = f.top + f.ph() - double(j2) * ch;
            char color[8];
            std::snprintf(color, sizeof color, "#%02x%02x%02x", g, g, g);
            out += "<rect x=\"" + fmt("%.2f", x) + "\" y=\"" + fmt("%.2f", y) + "\" width=\"" +
                   fmt("%.2f", cw + 0.01) + "\" height=\"" + fmt("%.2f", double(j2 - j) * ch) +
                   "\" fill=\"";
            out += color;
            out += "\"/>\n";
            j = j2;
        }
    }
    svg_axes(out, f, result.lambdas.front(), result.lambdas.back(), result.times.front(),
             result.times.back(), "lambda", "t [1/J]");
    out += "</svg>\n";
    write_file(path, out, "emit_svg");
}

void emit_svg(std::span<const EchoCurve> curves, const std::string& path, const SvgStyle& style) {
    if (curves.empty()) throw std::invalid_argument("emit_svg: no curves");
    std::vector<std::vector<double>> xs, ys;
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < curves.size(); ++c) {
        xs.push_back(curves[c].times);
        ys.push_back(curves[c].values);
        if (c < style.labels.size())
            labels.push_back(style.labels[c]);
        else
            labels.push_back("N=" + std::to_string(curves[c].params.N));
    }
    std::string out;
    curve_plot(out, style, "Loschmidt echo", xs, ys, labels);
    write_file(path, out, "emit_svg");
}

void emit_svg(const EchoCurve& curve, const std::string& path, const SvgStyle& style) {
    emit_svg(std::span<const EchoCurve>(&curve, 1), path, style);
}

}  // namespace isingecho
