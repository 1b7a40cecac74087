#include "pqforecast/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace pqf::io {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string escape(const std::string& s) {
	std::string out;
	for (char c : s) {
		switch (c) {
		case '&':
			out += "&amp;";
			break;
		case '<':
			out += "&lt;";
			break;
		case '>':
			out += "&gt;";
			break;
		case '"':
			out += "&quot;";
			break;
		default:
			out.push_back(c);
		}
	}
	return out;
}

struct Frame {
	double x0, x1, y0, y1;

	double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
	double py(double y) const { return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom); }
};

Frame make_frame(double x0, double x1, double y0, double y1) {
	if (!(x1 > x0)) {
		x0 -= 0.5;
		x1 += 0.5;
	}
	if (!(y1 > y0)) {
		y0 -= 0.5;
		y1 += 0.5;
	}
	const double pad = 0.05 * (y1 - y0);
	return {x0, x1, y0 - pad, y1 + pad};
}

std::string open(const ChartLabels& labels) {
	return fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
	                   "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n"
	                   "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
	                   "<text x=\"{2}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{3}</text>\n"
	                   "<text x=\"{2}\" y=\"{4}\" text-anchor=\"middle\">{5}</text>\n"
	                   "<text x=\"16\" y=\"{6}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {6})\">{7}</text>\n",
	                   kWidth, kHeight, kWidth / 2, escape(labels.title), kHeight - 12, escape(labels.x_label),
	                   kHeight / 2, escape(labels.y_label));
}

std::string axes(const Frame& f, bool numeric_x) {
	std::string out = fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#333\"/>\n",
	                              kLeft, kTop, kWidth - kLeft - kRight, kHeight - kTop - kBottom);
	for (int i = 0; i <= 4; ++i) {
		const double y = f.y0 + (f.y1 - f.y0) * i / 4.0;
		out += fmt::format("<line x1=\"{0}\" x2=\"{1}\" y1=\"{2:.1f}\" y2=\"{2:.1f}\" stroke=\"#ddd\"/>\n"
		                   "<text x=\"{3}\" y=\"{4:.1f}\" text-anchor=\"end\">{5:.3g}</text>\n",
		                   kLeft, kWidth - kRight, f.py(y), kLeft - 6, f.py(y) + 4, y);
		if (numeric_x) {
			const double x = f.x0 + (f.x1 - f.x0) * i / 4.0;
			out += fmt::format("<text x=\"{:.1f}\" y=\"{}\" text-anchor=\"middle\">{:.3g}</text>\n", f.px(x),
			                   kHeight - kBottom + 18, x);
		}
	}
	return out;
}

} // namespace

std::string svg_line_chart(const ChartLabels& labels, const std::vector<LineSeries>& lines) {
	double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
	for (const auto& l : lines) {
		for (const auto& [x, y] : l.points) {
			if (std::isfinite(x) && std::isfinite(y)) {
				x0 = std::min(x0, x);
				x1 = std::max(x1, x);
				y0 = std::min(y0, y);
				y1 = std::max(y1, y);
			}
		}
	}
	if (!std::isfinite(x0)) {
		x0 = y0 = 0.0;
		x1 = y1 = 1.0;
	}
	const auto f = make_frame(x0, x1, y0, y1);
	std::string out = open(labels) + axes(f, true);
	for (std::size_t i = 0; i < lines.size(); ++i) {
		const char* color = kPalette[i % std::size(kPalette)];
		std::string path;
		for (const auto& [x, y] : lines[i].points) {
			if (std::isfinite(x) && std::isfinite(y)) {
				path += fmt::format("{}{:.1f},{:.1f}", path.empty() ? "M" : " L", f.px(x), f.py(y));
			}
		}
		out += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.8\"/>\n", path, color);
		out += fmt::format("<text x=\"{}\" y=\"{}\" fill=\"{}\">{}</text>\n", kLeft + 10, kTop + 16 + 14 * i, color,
		                   escape(lines[i].label));
	}
	return out + "</svg>\n";
}

std::string svg_scatter(const ChartLabels& labels, const std::vector<std::pair<double, double>>& points,
                        bool diagonal) {
	double lo = std::numeric_limits<double>::infinity(), hi = -lo;
	for (const auto& [x, y] : points) {
		lo = std::min({lo, x, y});
		hi = std::max({hi, x, y});
	}
	if (!std::isfinite(lo)) {
		lo = 0.0;
		hi = 1.0;
	}
	const auto f = make_frame(lo, hi, lo, hi);
	std::string out = open(labels) + axes(f, true);
	if (diagonal) {
		out += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"#999\" "
		                   "stroke-dasharray=\"4 3\"/>\n",
		                   f.px(f.x0), f.py(f.x0), f.px(f.x1), f.py(f.x1));
	}
	for (const auto& [x, y] : points) {
		out += fmt::format("<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"2.5\" fill=\"{}\" fill-opacity=\"0.7\"/>\n", f.px(x),
		                   f.py(y), kPalette[0]);
	}
	return out + "</svg>\n";
}

std::string svg_bar_chart(const ChartLabels& labels, const std::vector<std::pair<std::string, double>>& bars) {
	double hi = 0.0;
	for (const auto& b : bars) {
		hi = std::max(hi, b.second);
	}
	const auto f = make_frame(0.0, static_cast<double>(std::max<std::size_t>(bars.size(), 1)), 0.0, hi);
	const Frame g{f.x0, f.x1, 0.0, f.y1};
	std::string out = open(labels) + axes(g, false);
	for (std::size_t i = 0; i < bars.size(); ++i) {
		const double xa = g.px(static_cast<double>(i) + 0.15);
		const double xb = g.px(static_cast<double>(i) + 0.85);
		const double yt = g.py(bars[i].second);
		out += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"{}\"/>\n", xa, yt,
		                   xb - xa, g.py(0.0) - yt, kPalette[0]);
		out += fmt::format("<text x=\"{:.1f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", 0.5 * (xa + xb),
		                   kHeight - kBottom + 18, escape(bars[i].first));
	}
	return out + "</svg>\n";
}

std::string svg_box_chart(const ChartLabels& labels, const std::vector<BoxItem>& items) {
	double lo = std::numeric_limits<double>::infinity(), hi = -lo;
	for (const auto& it : items) {
		lo = std::min(lo, it.min);
		hi = std::max(hi, it.max);
	}
	if (!std::isfinite(lo)) {
		lo = 0.0;
		hi = 1.0;
	}
	const auto f = make_frame(0.0, static_cast<double>(std::max<std::size_t>(items.size(), 1)), lo, hi);
	std::string out = open(labels) + axes(f, false);
	for (std::size_t i = 0; i < items.size(); ++i) {
		const auto& it = items[i];
		const double xc = f.px(static_cast<double>(i) + 0.5);
		const double half = 0.3 * (f.px(1.0) - f.px(0.0));
		out += fmt::format("<line x1=\"{0:.1f}\" x2=\"{0:.1f}\" y1=\"{1:.1f}\" y2=\"{2:.1f}\" stroke=\"#555\"/>\n", xc,
		                   f.py(it.min), f.py(it.max));
		out += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"{}\" "
		                   "fill-opacity=\"0.5\" stroke=\"#333\"/>\n",
		                   xc - half, f.py(it.p75), 2 * half, f.py(it.p25) - f.py(it.p75), kPalette[0]);
		out += fmt::format("<line x1=\"{0:.1f}\" x2=\"{1:.1f}\" y1=\"{2:.1f}\" y2=\"{2:.1f}\" stroke=\"{3}\" "
		                   "stroke-width=\"2\"/>\n",
		                   xc - half, xc + half, f.py(it.mean), kPalette[3]);
		out += fmt::format("<text x=\"{:.1f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", xc, kHeight - kBottom + 18,
		                   escape(it.label));
	}
	return out + "</svg>\n";
}

} // namespace pqf::io
