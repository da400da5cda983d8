"""Run reports and their table rendering.

Data flow:
ui commands -> run_report (collect) -> result_parser (render)
"""
