"""モデルテストパッケージ。"""
