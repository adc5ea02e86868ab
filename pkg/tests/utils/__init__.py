"""ユーティリティテストパッケージ。"""
