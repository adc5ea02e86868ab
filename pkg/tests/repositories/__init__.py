"""リポジトリテストパッケージ。"""
