from src.report.assembler import assemble_report, cluster_category
from src.report.redact import mac_text, redact_mac
from src.report.render import render, render_csv, render_json, render_text
